//! Line-oriented text formats for morphisms and directive sequences.
//!
//! A morphism is written
//!
//! ```text
//! alphabet: a b
//! codomain: 0 1      # optional, defaults to the alphabet
//! a -> 0 1
//! b -> 0
//! ```
//!
//! and a directive sequence as `prefix:` and `cycle:` sections, each holding
//! morphism blocks that start at their `alphabet:` line.

use crate::directive::DirectiveSequence;
use crate::error::{Error, Result};
use crate::morphism::{Alphabet, Morphism};

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn alphabet_of(names: &str, line: usize) -> Result<Alphabet> {
    let toks: Vec<&str> = names.split_whitespace().collect();
    if toks.is_empty() {
        return Err(Error::Parse { line, msg: "empty alphabet".into() });
    }
    Alphabet::named(toks.iter().copied()).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

struct Block {
    start: usize,
    lines: Vec<(usize, String)>,
}

fn parse_block(b: &Block) -> Result<Morphism> {
    let mut it = b.lines.iter().peekable();
    let (ln, first) = it.next().ok_or_else(|| Error::Parse { line: b.start, msg: "empty morphism".into() })?;
    let names = first
        .strip_prefix("alphabet:")
        .ok_or_else(|| Error::Parse { line: *ln, msg: "expected `alphabet:`".into() })?;
    let domain = alphabet_of(names, *ln)?;
    let mut codomain = domain.clone();
    if let Some((ln, l)) = it.peek() {
        if let Some(names) = l.strip_prefix("codomain:") {
            codomain = alphabet_of(names, *ln)?;
            it.next();
        }
    }
    let mut images = vec![None; domain.size()];
    for (ln, l) in it {
        let (lhs, rhs) = l
            .split_once("->")
            .ok_or_else(|| Error::Parse { line: *ln, msg: format!("expected `letter -> image`, found {l:?}") })?;
        let a = domain
            .index_of(lhs.trim())
            .ok_or_else(|| Error::Parse { line: *ln, msg: format!("unknown letter {:?}", lhs.trim()) })?;
        let img = codomain.parse_word(rhs).map_err(|e| Error::Parse { line: *ln, msg: e.to_string() })?;
        if img.is_empty() {
            return Err(Error::Parse { line: *ln, msg: "images must be nonempty".into() });
        }
        if images[a as usize].replace(img).is_some() {
            return Err(Error::Parse { line: *ln, msg: format!("letter {} has two images", lhs.trim()) });
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(a, w)| {
            w.ok_or_else(|| Error::Parse { line: b.start, msg: format!("no image for letter {}", domain.name(a as u32)) })
        })
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(domain, codomain, images)
}

fn blocks(lines: &[(usize, String)]) -> Result<Vec<Block>> {
    let mut out: Vec<Block> = Vec::new();
    for (ln, l) in lines {
        if l.starts_with("alphabet:") {
            out.push(Block { start: *ln, lines: vec![] });
        }
        match out.last_mut() {
            Some(b) => b.lines.push((*ln, l.clone())),
            None => return Err(Error::Parse { line: *ln, msg: "expected `alphabet:`".into() }),
        }
    }
    Ok(out)
}

fn content(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip(l).to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let lines = content(text);
    let bs = blocks(&lines)?;
    match bs.as_slice() {
        [b] => parse_block(b),
        [] => Err(Error::Parse { line: 1, msg: "no morphism found".into() }),
        [_, b, ..] => Err(Error::Parse { line: b.start, msg: "expected a single morphism".into() }),
    }
}

pub fn parse_directive_sequence(text: &str) -> Result<DirectiveSequence> {
    let lines = content(text);
    let mut prefix = Vec::new();
    let mut cycle: Option<Vec<(usize, String)>> = None;
    let mut section: Option<&str> = None;
    for (ln, l) in lines {
        match l.as_str() {
            "prefix:" if section.is_none() => section = Some("prefix"),
            "cycle:" if cycle.is_none() => {
                section = Some("cycle");
                cycle = Some(vec![]);
            }
            _ => match section {
                Some("prefix") => prefix.push((ln, l)),
                Some(_) => cycle.as_mut().expect("in cycle").push((ln, l)),
                None => return Err(Error::Parse { line: ln, msg: "expected `prefix:` or `cycle:`".into() }),
            },
        }
    }
    let pre = blocks(&prefix)?.iter().map(parse_block).collect::<Result<Vec<_>>>()?;
    let cyc = match cycle {
        Some(c) => {
            let ms = blocks(&c)?.iter().map(parse_block).collect::<Result<Vec<_>>>()?;
            if ms.is_empty() {
                return Err(Error::Parse { line: 0, msg: "the cycle is empty".into() });
            }
            Some(ms)
        }
        None => None,
    };
    DirectiveSequence::new(pre, cyc)
}

pub fn directive_to_text(d: &DirectiveSequence) -> String {
    let mut s = String::from("prefix:\n");
    for m in d.prefix() {
        s.push_str(&m.to_text());
    }
    if let Some(c) = d.cycle() {
        s.push_str("cycle:\n");
        for m in c {
            s.push_str(&m.to_text());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn morphism_round_trip() {
        let f = Morphism::from_digits(&["01", "0"]).unwrap();
        assert_eq!(parse_morphism(&f.to_text()).unwrap(), f);
        let s0 = Morphism::from_names("ABC", "01", &["00", "01", "10"]).unwrap();
        assert_eq!(parse_morphism(&s0.to_text()).unwrap(), s0);
        let text = "# fibonacci\nalphabet: 0 1\n1 -> 0   # second\n0 -> 0 1\n";
        assert_eq!(parse_morphism(text).unwrap(), f);
    }

    #[test]
    fn morphism_errors() {
        for (text, line) in [
            ("alphabet: a b\na -> b\n", 1),
            ("alphabet: a b\na -> c\nb -> a\n", 2),
            ("alphabet: a b\na b\n", 2),
            ("a -> b\n", 1),
            ("alphabet: a b\na -> b\na -> a\n", 3),
        ] {
            match parse_morphism(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse_morphism("").is_err());
    }

    #[test]
    fn directive_round_trip() {
        let s0 = Morphism::from_names("ABC", "01", &["00", "01", "10"]).unwrap();
        let theta = Morphism::from_digits(&["00100", "00000"]).unwrap();
        let t1 = crate::morphism::conjugate_by_coding(&theta, &s0).unwrap();
        let d = DirectiveSequence::new(vec![s0], Some(vec![t1])).unwrap();
        let text = directive_to_text(&d);
        assert_eq!(parse_directive_sequence(&text).unwrap(), d);
        let fin = DirectiveSequence::new(vec![Morphism::from_digits(&["01", "0"]).unwrap()], None).unwrap();
        assert_eq!(parse_directive_sequence(&directive_to_text(&fin)).unwrap(), fin);
        assert!(parse_directive_sequence("alphabet: 0\n0 -> 0\n").is_err());
        assert!(parse_directive_sequence("cycle:\n").is_err());
    }
}
