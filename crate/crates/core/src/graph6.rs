//! graph6 encoding: a size prefix, then the upper triangle column by column,
//! six bits per byte, each byte offset by 63.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let (mut acc, mut filled) = (0u8, 0);
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} at offset {i} is outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(bad("empty string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte size"));
            }
            (rest[..6].iter().fold(0, |a, &b| (a << 6) | six(b)), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte size"));
            }
            (rest[..3].iter().fold(0, |a, &b| (a << 6) | six(b)), &rest[3..])
        }
        [b, rest @ ..] => (six(*b), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(format!(
            "order {n} needs {} data bytes, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if six(*body.last().unwrap()) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// One graph per non-blank line; a leading header is skipped, including one
/// glued to the first graph.
pub fn read_all<R: BufRead>(r: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        let t = if i == 0 { t.strip_prefix(HEADER).unwrap_or(t) } else { t };
        if t.is_empty() {
            continue;
        }
        out.push(decode(t).map_err(|e| bad(format!("line {}: {e}", i + 1)))?);
    }
    Ok(out)
}

pub fn read_file(path: &std::path::Path) -> Result<Vec<Graph>> {
    read_all(std::io::BufReader::new(std::fs::File::open(path)?))
}

pub fn write_all<'a, W: Write>(mut w: W, graphs: impl IntoIterator<Item = &'a Graph>) -> Result<()> {
    for g in graphs {
        writeln!(w, "{}", encode(g))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Complete(3).build().unwrap()), "Bw");
        assert_eq!(encode(&Empty(1).build().unwrap()), "@");
        assert_eq!(encode(&Path(2).build().unwrap()), "A_");
        assert_eq!(encode(&Path(4).build().unwrap()), "Ch");
        assert_eq!(decode("Bw").unwrap(), Complete(3).build().unwrap());
    }

    #[test]
    fn long_sizes() {
        for n in [62, 63, 64, 100] {
            let g = Cycle(n).build().unwrap();
            let s = encode(&g);
            assert_eq!(s.starts_with('~'), n > 62);
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err());
        assert!(decode("Bww").is_err());
        assert!(decode("Bx").is_err());
        assert!(decode("B\u{1f}").is_err());
        assert!(decode("~?").is_err());
    }

    #[test]
    fn header_tolerated() {
        let text = ">>graph6<<Bw\n\nA_\n";
        let gs = read_all(text.as_bytes()).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(decode(">>graph6<<Bw").unwrap().m(), 3);
        let mut buf = Vec::new();
        write_all(&mut buf, &gs).unwrap();
        assert_eq!(buf, b"Bw\nA_\n");
    }
}
