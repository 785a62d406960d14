use super::{Block, Dec, Label, Node, PForest, VertexRef};
use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn forest(&mut self) -> Result<Vec<Block>> {
        self.expect(b'{')?;
        let mut blocks = Vec::new();
        if !self.eat(b'}') {
            loop {
                blocks.push(self.block()?);
                if self.eat(b'}') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        Ok(blocks)
    }

    fn block(&mut self) -> Result<Block> {
        self.expect(b'[')?;
        let mut nodes = vec![self.node()?];
        while self.eat(b',') {
            nodes.push(self.node()?);
        }
        self.expect(b']')?;
        Ok(nodes)
    }

    fn node(&mut self) -> Result<Node> {
        let dec = self.dec()?;
        let mut children = Vec::new();
        if self.eat(b'(') {
            children.push(self.block()?);
            while self.eat(b',') {
                children.push(self.block()?);
            }
            self.expect(b')')?;
        }
        Ok(Node { dec, children })
    }

    fn dec(&mut self) -> Result<Dec> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected a label"));
        }
        if self.s.get(self.pos) == Some(&b'<') {
            let mut depth = 0i32;
            loop {
                match self.s.get(self.pos) {
                    None => return Err(Error::parse(self.pos, "unbalanced '<'")),
                    Some(b'<') => depth += 1,
                    Some(b'>') => depth -= 1,
                    _ => {}
                }
                self.pos += 1;
                if depth == 0 {
                    break;
                }
            }
        }
        let label = std::str::from_utf8(&self.s[start..self.pos])
            .map_err(|_| Error::parse(start, "invalid UTF-8"))?;
        let label = Label::new(label);
        let mut counter = 0u32;
        if self.eat(b':') {
            self.skip_ws();
            let nstart = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            counter = std::str::from_utf8(&self.s[nstart..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::parse(nstart, "expected a counter"))?;
        }
        Ok(Dec { label, counter })
    }
}

/// Parses the bracket grammar, e.g. `{[d:1([e,f])]}`, and canonicalizes.
pub fn parse_forest(s: &str) -> Result<PForest> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let blocks = p.forest()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    PForest::from_blocks(blocks)
}

/// Parses a vertex path written as `b:n/b:n/...`.
pub fn parse_vertex_ref(s: &str) -> Result<VertexRef> {
    s.split('/')
        .map(|step| {
            let (b, n) = step
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::parse(0, format!("bad vertex step {step:?}")))?;
            let b = b
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, "bad block index"))?;
            let n = n
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, "bad node index"))?;
            Ok((b, n))
        })
        .collect()
}
