use std::collections::BTreeMap;

use super::DegNeg1Spec;
use crate::error::{Error, Result};
use crate::linear::{parse_lincomb, LinComb};
use crate::ptree::Label;
use crate::ucp::FMatrix;

/// Structure constants read from a line-oriented file:
///
/// ```text
/// # comment
/// f x1 -> x0
/// star x y -> 2*y + -1*z
/// br x y -> 1/2*y
/// ```
#[derive(Clone, Debug)]
pub struct SpecFile {
    pub labels: Vec<Label>,
    pub f: Option<FMatrix>,
    pub degneg1: Option<DegNeg1Spec>,
}

fn letter(s: &str, pos: usize) -> Result<Label> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'_') {
        return Err(Error::parse(pos, format!("bad letter {s:?}")));
    }
    Ok(Label::new(s))
}

/// Parses a spec file. Without an explicit alphabet, the letters are collected in order of first
/// appearance.
pub fn parse_spec_file(text: &str, alphabet: Option<Vec<Label>>) -> Result<SpecFile> {
    enum Kind {
        F,
        Star,
        Br,
    }
    let mut entries = Vec::new();
    let mut seen: Vec<Label> = Vec::new();
    let mut note = |l: &Label| {
        if !seen.contains(l) {
            seen.push(l.clone());
        }
    };
    let mut offset = 0;
    for line in text.lines() {
        let pos = offset;
        offset += line.len() + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (lhs, rhs) = body
            .split_once("->")
            .ok_or_else(|| Error::parse(pos, "expected `->`"))?;
        let words: Vec<&str> = lhs.split_whitespace().collect();
        let (kind, args) = match words.as_slice() {
            ["f", d] => (Kind::F, vec![letter(d, pos)?]),
            ["star", d, e] => (Kind::Star, vec![letter(d, pos)?, letter(e, pos)?]),
            ["br", d, e] => (Kind::Br, vec![letter(d, pos)?, letter(e, pos)?]),
            _ => return Err(Error::parse(pos, format!("unrecognised entry {lhs:?}"))),
        };
        let value: LinComb<Label> =
            parse_lincomb(rhs, |s| letter(s.trim(), pos)).map_err(|e| match e {
                Error::Parse { pos: p, msg } => Error::Parse { pos: pos + p, msg },
                other => other,
            })?;
        args.iter().chain(value.keys()).for_each(&mut note);
        entries.push((kind, args, value));
    }
    let labels = alphabet.unwrap_or(seen);
    let mut images = BTreeMap::new();
    let mut spec = DegNeg1Spec::new(labels.clone());
    let (mut has_f, mut has_deg) = (false, false);
    for (kind, args, value) in entries {
        match kind {
            Kind::F => {
                has_f = true;
                images.insert(args[0].clone(), value);
            }
            Kind::Star => {
                has_deg = true;
                spec.set_star(&args[0], &args[1], value)?;
            }
            Kind::Br => {
                has_deg = true;
                spec.set_bracket(&args[0], &args[1], value)?;
            }
        }
    }
    let f = if has_f {
        Some(FMatrix::from_images(labels.clone(), images)?)
    } else {
        None
    };
    Ok(SpecFile {
        labels,
        f,
        degneg1: has_deg.then_some(spec),
    })
}
