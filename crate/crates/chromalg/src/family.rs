//! Named graph families and the text specs that build them.
//!
//! Spec strings: `St:7`, `P:6`, `C:5`, `K:4`, `Cat:3,1,1,2`, `Cut:4,3`,
//! `Fig1`, `Fig2G`, `Fig2H`. The general `parse_graph_spec` additionally
//! accepts `{"n":..,"edges":[[u,v],..]}` JSON and graph6 strings.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// `St_k`: vertex 0 is the centre, joined to `k-1` leaves. `St_1` is a
/// single vertex, `St_2` a single edge.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Constraint("St_k needs k >= 1".into()));
    }
    let mut g = Graph::new(k)?;
    for v in 1..k {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Constraint("P_n needs n >= 1".into()));
    }
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(c: usize) -> Result<Graph> {
    if c < 3 {
        return Err(Error::Constraint("C_c needs c >= 3".into()));
    }
    let mut g = Graph::new(c)?;
    for v in 1..c {
        g.add_edge(v - 1, v)?;
    }
    g.add_edge(c - 1, 0)?;
    Ok(g)
}

pub fn complete(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Constraint("K_k needs k >= 1".into()));
    }
    let mut g = Graph::new(k)?;
    for u in 0..k {
        for v in (u + 1)..k {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `Cat_α`: spine vertices `0..ℓ-1` in path order, with `α_i - 1` pendant
/// leaves on spine vertex `i`. Requires `α_1, α_ℓ >= 2` so the spine is the
/// full set of non-leaves.
pub fn caterpillar(alpha: &[u32]) -> Result<Graph> {
    if alpha.is_empty() {
        return Err(Error::Constraint("Cat needs a nonempty composition".into()));
    }
    if alpha[0] < 2 || alpha[alpha.len() - 1] < 2 {
        return Err(Error::Constraint(format!(
            "Cat composition must start and end with parts >= 2, got {alpha:?}"
        )));
    }
    caterpillar_unchecked(alpha)
}

/// Caterpillar construction without the end-part constraint; compositions
/// with leading or trailing 1 still describe valid trees (the spine vertex
/// simply carries no leaf), which the cut-relation identities need.
pub(crate) fn caterpillar_unchecked(alpha: &[u32]) -> Result<Graph> {
    if alpha.iter().any(|&p| p == 0) {
        return Err(Error::Constraint("Cat parts must be positive".into()));
    }
    let spine = alpha.len();
    let n: usize = alpha.iter().map(|&p| p as usize).sum();
    let mut g = Graph::new(n)?;
    for v in 1..spine {
        g.add_edge(v - 1, v)?;
    }
    let mut next = spine;
    for (i, &part) in alpha.iter().enumerate() {
        for _ in 0..part - 1 {
            g.add_edge(i, next)?;
            next += 1;
        }
    }
    Ok(g)
}

/// `Cut_{c,ℓ}`: cycle `0..c-1` with `ℓ` pendant leaves on vertex 0.
pub fn cuttlefish(c: usize, leaves: usize) -> Result<Graph> {
    if c < 3 {
        return Err(Error::Constraint("Cut_{c,l} needs c >= 3".into()));
    }
    let mut g = cycle(c)?;
    let mut out = Graph::new(c + leaves)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for i in 0..leaves {
        out.add_edge(0, c + i)?;
    }
    g = out;
    Ok(g)
}

/// The five-vertex running example: a triangle with a pendant edge on two of
/// its vertices. The marked internal edge is `(1, 2)`.
pub fn fig1() -> Result<Graph> {
    Graph::from_edges(5, &[(0, 1), (1, 3), (3, 4), (1, 2), (2, 3)])
}

/// Six-vertex graph with connectivity 3; chromatically equivalent to
/// [`fig2h`].
pub fn fig2g() -> Result<Graph> {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 3),
            (2, 3),
            (0, 2),
            (1, 5),
            (3, 5),
            (3, 4),
            (1, 4),
            (4, 5),
            (0, 4),
            (2, 4),
        ],
    )
}

/// Six-vertex graph with connectivity 2; chromatically equivalent to
/// [`fig2g`].
pub fn fig2h() -> Result<Graph> {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 4),
            (4, 3),
            (3, 2),
            (0, 2),
            (0, 3),
            (3, 5),
            (1, 5),
            (1, 2),
            (0, 4),
            (2, 4),
        ],
    )
}

fn parse_usize(token: &str, what: &str) -> Result<usize> {
    token
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::InvalidGraphSpec(format!("bad {what} in {token:?}")))
}

/// Parses a family spec string such as `St:7` or `Cat:3,1,1,2`.
pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    match spec {
        "Fig1" => return fig1(),
        "Fig2G" => return fig2g(),
        "Fig2H" => return fig2h(),
        _ => {}
    }
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidGraphSpec(format!("no family in {spec:?}")))?;
    match name {
        "St" => star(parse_usize(args, "star size")?),
        "P" => path(parse_usize(args, "path size")?),
        "C" => cycle(parse_usize(args, "cycle size")?),
        "K" => complete(parse_usize(args, "clique size")?),
        "Cat" => {
            let parts = args
                .split(',')
                .map(|t| parse_usize(t, "caterpillar part").map(|p| p as u32))
                .collect::<Result<Vec<_>>>()?;
            caterpillar(&parts)
        }
        "Cut" => {
            let parts = args
                .split(',')
                .map(|t| parse_usize(t, "cuttlefish parameter"))
                .collect::<Result<Vec<_>>>()?;
            if parts.len() != 2 {
                return Err(Error::InvalidGraphSpec(format!(
                    "Cut takes exactly two parameters, got {spec:?}"
                )));
            }
            cuttlefish(parts[0], parts[1])
        }
        other => Err(Error::InvalidGraphSpec(format!("unknown family {other:?}"))),
    }
}

/// Accepts a family spec, an edge-list JSON object, or a graph6 string, in
/// that order of precedence.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::InvalidGraphSpec("empty spec".into()));
    }
    if matches!(spec, "Fig1" | "Fig2G" | "Fig2H") || spec.contains(':') {
        return parse_family_spec(spec);
    }
    if spec.starts_with('{') {
        return Graph::from_json(spec);
    }
    graph6::decode(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn caterpillar_of_two_twos_is_path() {
        // Cat_{2 1^{n-4} 2} is the path P_n.
        for n in 4..=8 {
            let mut alpha = vec![2u32];
            alpha.extend(std::iter::repeat(1).take(n - 4));
            alpha.push(2);
            let cat = caterpillar(&alpha).unwrap();
            assert!(is_isomorphic(&cat, &path(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn cuttlefish_without_leaves_is_cycle() {
        for c in 3..=7 {
            assert!(is_isomorphic(&cuttlefish(c, 0).unwrap(), &cycle(c).unwrap()).unwrap());
        }
    }

    #[test]
    fn caterpillar_n_minus_2_2() {
        // Cat_{(n-2)2}: a star St_{n-1} with one extra pendant on a leaf.
        for n in 5..=8 {
            let cat = caterpillar(&[(n - 2) as u32, 2]).unwrap();
            let mut by_hand = star(n - 1).unwrap();
            let mut g = Graph::new(n).unwrap();
            for (u, v) in by_hand.edges() {
                g.add_edge(u, v).unwrap();
            }
            g.add_edge(1, n - 1).unwrap();
            by_hand = g;
            assert!(is_isomorphic(&cat, &by_hand).unwrap());
        }
    }

    #[test]
    fn caterpillar_single_part_is_star() {
        assert!(is_isomorphic(&caterpillar(&[6]).unwrap(), &star(6).unwrap()).unwrap());
    }

    #[test]
    fn caterpillar_end_constraint() {
        assert!(caterpillar(&[1, 3, 2]).is_err());
        assert!(caterpillar(&[2, 3, 1]).is_err());
        assert!(caterpillar_unchecked(&[1, 1, 2]).is_ok());
    }

    #[test]
    fn spec_parsing() {
        assert!(is_isomorphic(
            &parse_graph_spec("Cat:3,1,1,2").unwrap(),
            &caterpillar(&[3, 1, 1, 2]).unwrap()
        )
        .unwrap());
        assert_eq!(parse_graph_spec("St:7").unwrap(), star(7).unwrap());
        assert_eq!(parse_graph_spec("Fig2G").unwrap(), fig2g().unwrap());
        assert_eq!(parse_graph_spec("Cut:4,3").unwrap(), cuttlefish(4, 3).unwrap());
        let json = r#"{"n": 3, "edges": [[0,1],[1,2]]}"#;
        assert_eq!(parse_graph_spec(json).unwrap(), path(3).unwrap());
        assert_eq!(parse_graph_spec("DQc").unwrap().n(), 5);
        assert!(parse_graph_spec("St:x").is_err());
        assert!(parse_graph_spec("Q:4").is_err());
        assert!(parse_graph_spec("Cat:1,2").is_err());
    }

    #[test]
    fn unchecked_caterpillar_with_leading_one_is_path() {
        // Cat_{1 1^{n-3} 2} degenerates to P_n.
        for n in 4..=7 {
            let mut alpha = vec![1u32; n - 2];
            alpha.push(2);
            let cat = caterpillar_unchecked(&alpha).unwrap();
            assert!(is_isomorphic(&cat, &path(n).unwrap()).unwrap());
        }
    }
}
