//! Text formats.
//!
//! Edge list: first data line `n m`, then `m` lines `u v` with 0-based ids.
//! Lattice file: first data line `n nu induced` (`induced` is `0` or `1`), then
//! `n` lines `vid x_1 … x_nu`; when `induced` is `0` a line `m` and `m` edge
//! lines follow. Pair file: lines `u v`. In all formats `#` starts a comment
//! and blank lines are ignored. Reported line numbers are 1-based.

use std::fmt::Write as _;

use super::{gen_lattice_subgraph, Graph, LatticeEmbedding};
use crate::error::{Error, Result};

struct DataLines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> DataLines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last_line: 0,
        }
    }

    fn next_fields(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            let content = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            if !fields.is_empty() {
                self.last_line = i + 1;
                return Some((i + 1, fields));
            }
        }
        None
    }

    fn expect_fields(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.next_fields().ok_or_else(|| Error::Parse {
            line: self.last_line + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.next_fields() {
            None => Ok(()),
            Some((line, _)) => Err(Error::Parse {
                line,
                message: "unexpected extra data".into(),
            }),
        }
    }
}

fn parse_num<T: std::str::FromStr>(field: &str, line: usize, what: &str) -> Result<T> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("cannot parse {what} from `{field}`"),
    })
}

fn expect_arity(fields: &[&str], arity: usize, line: usize, what: &str) -> Result<()> {
    if fields.len() != arity {
        return Err(Error::Parse {
            line,
            message: format!("expected {what} ({arity} fields), found {} fields", fields.len()),
        });
    }
    Ok(())
}

fn parse_edge(fields: &[&str], line: usize, n: usize) -> Result<(usize, usize)> {
    expect_arity(fields, 2, line, "an edge `u v`")?;
    let u: usize = parse_num(fields[0], line, "vertex id")?;
    let v: usize = parse_num(fields[1], line, "vertex id")?;
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { line, vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop { line, vertex: u });
    }
    Ok((u, v))
}

fn parse_edges(lines: &mut DataLines<'_>, n: usize, m: usize) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, fields) = lines.expect_fields("an edge line")?;
        pairs.push(parse_edge(&fields, line, n)?);
    }
    Ok(pairs)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = DataLines::new(text);
    let (line, header) = lines.expect_fields("header `n m`")?;
    expect_arity(&header, 2, line, "header `n m`")?;
    let n: usize = parse_num(header[0], line, "vertex count")?;
    let m: usize = parse_num(header[1], line, "edge count")?;
    if n == 0 {
        return Err(Error::Parse {
            line,
            message: "vertex count must be positive".into(),
        });
    }
    let pairs = parse_edges(&mut lines, n, m)?;
    lines.expect_end()?;
    Graph::from_edge_list(n, &pairs)
}

/// Canonical form: header, then edges `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_lattice_file(text: &str) -> Result<(Graph, LatticeEmbedding)> {
    let mut lines = DataLines::new(text);
    let (line, header) = lines.expect_fields("header `n nu induced`")?;
    expect_arity(&header, 3, line, "header `n nu induced`")?;
    let n: usize = parse_num(header[0], line, "vertex count")?;
    let nu: usize = parse_num(header[1], line, "dimension")?;
    let induced = match header[2] {
        "0" => false,
        "1" => true,
        other => {
            return Err(Error::Parse {
                line,
                message: format!("induced flag must be 0 or 1, found `{other}`"),
            })
        }
    };
    if n == 0 || nu == 0 {
        return Err(Error::Parse {
            line,
            message: "vertex count and dimension must be positive".into(),
        });
    }
    let mut coords: Vec<Option<Vec<i64>>> = vec![None; n];
    for _ in 0..n {
        let (line, fields) = lines.expect_fields("a coordinate line")?;
        expect_arity(&fields, nu + 1, line, "`vid x_1 … x_nu`")?;
        let vid: usize = parse_num(fields[0], line, "vertex id")?;
        if vid >= n {
            return Err(Error::VertexOutOfRange { line, vertex: vid, n });
        }
        if coords[vid].is_some() {
            return Err(Error::Parse {
                line,
                message: format!("vertex {vid} listed twice"),
            });
        }
        let c = fields[1..]
            .iter()
            .map(|f| parse_num(f, line, "coordinate"))
            .collect::<Result<Vec<i64>>>()?;
        coords[vid] = Some(c);
    }
    let coords: Vec<Vec<i64>> = coords.into_iter().map(|c| c.expect("all ids seen")).collect();
    if induced {
        lines.expect_end()?;
        gen_lattice_subgraph(coords, true, None)
    } else {
        let (line, fields) = lines.expect_fields("edge count `m`")?;
        expect_arity(&fields, 1, line, "edge count `m`")?;
        let m: usize = parse_num(fields[0], line, "edge count")?;
        let pairs = parse_edges(&mut lines, n, m)?;
        lines.expect_end()?;
        gen_lattice_subgraph(coords, false, Some(&pairs))
    }
}

pub fn write_lattice_file(g: &Graph, emb: &LatticeEmbedding) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", emb.n(), emb.nu(), u8::from(emb.induced()));
    for (v, c) in emb.coords().iter().enumerate() {
        let _ = write!(out, "{v}");
        for x in c {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    if !emb.induced() {
        let _ = writeln!(out, "{}", g.m());
        for &(u, v) in g.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

/// Ordered vertex pairs, one `u v` per line, validated against `n`.
pub fn parse_pairs(text: &str, n: usize) -> Result<Vec<(usize, usize)>> {
    let mut lines = DataLines::new(text);
    let mut pairs = Vec::new();
    while let Some((line, fields)) = lines.next_fields() {
        pairs.push(parse_edge(&fields, line, n)?);
    }
    Ok(pairs)
}
