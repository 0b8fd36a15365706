//! Graph ingestion: graph6 (canonical interchange, up to 62 vertices) and a
//! human-friendly edge-list text format.
//!
//! Edge lists: first nonempty line is the vertex count, each following
//! nonempty line is `u v`. Lines starting with `#` are comments.

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_BIAS: u8 = 63;

/// Decode a single-line graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if bytes[0] == 126 {
        return Err(Error::MalformedGraph6(
            "extended size encodings (> 62 vertices) are not supported".into(),
        ));
    }
    if !(G6_BIAS..=125).contains(&bytes[0]) {
        return Err(Error::MalformedGraph6(format!(
            "size byte {} out of range",
            bytes[0]
        )));
    }
    let n = (bytes[0] - G6_BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::MalformedGraph6(format!(
            "expected {} adjacency bytes for n={}, found {}",
            nbytes,
            n,
            bytes.len() - 1
        )));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in &bytes[1..] {
        if !(G6_BIAS..=126).contains(&b) {
            return Err(Error::MalformedGraph6(format!("byte {b} out of range")));
        }
        let x = b - G6_BIAS;
        for k in (0..6).rev() {
            bits.push((x >> k) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encode as graph6. Inverse of [`parse_graph6`] for graphs on at most 62
/// vertices.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::BadParameter(format!(
            "graph6 emitter supports up to 62 vertices, got {n}"
        )));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = vec![G6_BIAS + n as u8];
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                x |= 1 << (5 - k);
            }
        }
        out.push(G6_BIAS + x);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// Parse the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedEdgeList("missing vertex-count line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::MalformedEdgeList(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::MalformedEdgeList(format!(
                    "expected \"u v\", found {line:?}"
                )))
            }
        };
        let u: usize = u
            .parse()
            .map_err(|_| Error::MalformedEdgeList(format!("bad endpoint {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::MalformedEdgeList(format!("bad endpoint {v:?}")))?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for w in [u, v] {
            if w >= n {
                return Err(Error::EndpointOutOfRange { vertex: w, n });
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn graph6_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(emit_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn graph6_empty_input_rejected() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("  \n"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn graph6_truncated_rejected() {
        // n = 5 needs two adjacency bytes
        assert!(matches!(parse_graph6("D?"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("A_x"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn graph6_known_five_vertex_string() {
        // edges {0,2},{0,4},{1,3},{3,4}
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn graph6_roundtrip_families() {
        for g in [
            generate::complete(5).unwrap(),
            generate::cycle(6).unwrap(),
            generate::star(4).unwrap(),
            Graph::new(0, []).unwrap(),
            Graph::new(7, []).unwrap(),
        ] {
            let enc = emit_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g, generate::path(3).unwrap());

        assert_eq!(
            parse_edge_list("3\n0 1\n0 1"),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            parse_edge_list("2\n0 2"),
            Err(Error::EndpointOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(parse_edge_list("2\n1 1"), Err(Error::LoopEdge(1)));
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::MalformedEdgeList(_))
        ));
        assert!(matches!(
            parse_edge_list("2\n0 1 extra"),
            Err(Error::MalformedEdgeList(_))
        ));
    }

    #[test]
    fn edge_list_allows_comments_and_blanks() {
        let g = parse_edge_list("# a triangle\n3\n\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g, generate::cycle(3).unwrap());
    }
}
