//! Named graph families with fixed vertex numbering.
//!
//! Numbering conventions:
//!
//! * `TrianglePaths(j,k,ℓ)`: triangle `0,1,2`; then the `j`-path hanging off
//!   `0`, the `k`-path off `1`, the `ℓ`-path off `2`, each listed from the
//!   triangle outwards.
//! * `CycleChord(k,ℓ)`: cycle `0..k`, chord `0–2`, then the `ℓ`-path off `1`.
//! * `Pentagon(k,ℓ)`: 5-cycle `0..5`, then `k` leaves on `0`, then `ℓ` leaves
//!   on `2`.
//! * `TriBase(t, _)`: same graph and numbering as `TrianglePaths(t,t,t)`.
//! * `CompleteBipartite(a,b)`: part `0..a`, then part `a..a+b`.
//! * `Star(k)`: center `0`, leaves `1..=k`.
//! * `Join(g,h)`: vertices of `g` first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Figure {
    /// Triangle with one pendant edge; shifted vertices 1 and 3.
    BaseTriangle,
    /// `TriBase(1)` skeleton, two shifted endpoints.
    TriBaseTwo,
    /// `TriBase(1)` skeleton, three shifted endpoints.
    TriBaseThree,
    /// 9-vertex base of the first Case-2 matrix.
    CaseTwoA,
    /// 5-vertex base of the second Case-2 matrix.
    CaseTwoB,
    /// Two triangles sharing vertex 0 with a pendant at 1 and at 3.
    Bowtie,
    /// 5-cycle plus a 2-vertex path between vertices 0 and 2.
    PentagonBridge,
    /// `H(2,2)`.
    PentagonLeaves,
    /// `P(1,1,0)`.
    TriangleTwoPendants,
    /// `PentagonBridge` plus chord `0–2` and a leaf at each of `0`, `2`.
    PentagonBridgeChord,
}

impl Figure {
    pub const ALL: [Figure; 10] = [
        Figure::BaseTriangle,
        Figure::TriBaseTwo,
        Figure::TriBaseThree,
        Figure::CaseTwoA,
        Figure::CaseTwoB,
        Figure::Bowtie,
        Figure::PentagonBridge,
        Figure::PentagonLeaves,
        Figure::TriangleTwoPendants,
        Figure::PentagonBridgeChord,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Figure::BaseTriangle => "1",
            Figure::TriBaseTwo => "2a",
            Figure::TriBaseThree => "2b",
            Figure::CaseTwoA => "3a",
            Figure::CaseTwoB => "3b",
            Figure::Bowtie => "4",
            Figure::PentagonBridge => "5a",
            Figure::PentagonLeaves => "5b",
            Figure::TriangleTwoPendants => "6a",
            Figure::PentagonBridgeChord => "6b",
        }
    }

    pub fn from_id(id: &str) -> Option<Figure> {
        Figure::ALL.into_iter().find(|f| f.id() == id)
    }

    /// Order and edge list.
    pub fn edges(self) -> (usize, Vec<(usize, usize)>) {
        match self {
            Figure::BaseTriangle => (4, vec![(0, 1), (1, 2), (0, 2), (0, 3)]),
            Figure::TriBaseTwo | Figure::TriBaseThree => {
                (6, vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
            }
            Figure::CaseTwoA => (
                9,
                vec![
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 4),
                    (2, 5),
                    (4, 6),
                    (5, 7),
                    (6, 8),
                ],
            ),
            Figure::CaseTwoB => (5, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 4)]),
            Figure::Bowtie => (
                7,
                vec![(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5), (3, 6)],
            ),
            Figure::PentagonBridge => (
                7,
                vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 2)],
            ),
            Figure::PentagonLeaves => (
                9,
                vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (0, 6), (2, 7), (2, 8)],
            ),
            Figure::TriangleTwoPendants => (5, vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
            Figure::PentagonBridgeChord => (
                9,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 0),
                    (0, 5),
                    (5, 6),
                    (6, 2),
                    (0, 2),
                    (0, 7),
                    (2, 8),
                ],
            ),
        }
    }

    /// Vertices whose diagonal entries are shifted when the figure serves
    /// as a gluing base.
    pub fn marked(self) -> &'static [usize] {
        match self {
            Figure::BaseTriangle => &[1, 3],
            Figure::TriBaseTwo => &[4, 5],
            Figure::TriBaseThree => &[3, 4, 5],
            Figure::CaseTwoA => &[7, 8],
            Figure::CaseTwoB => &[2],
            _ => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    TrianglePaths(usize, usize, usize),
    CycleChord(usize, usize),
    Pentagon(usize, usize),
    TriBase(usize, u8),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    CyclePower(usize, usize),
    Figure(Figure),
}

fn bad(spec: &FamilySpec, constraint: impl Into<String>) -> Error {
    Error::param(spec.to_string(), constraint)
}

impl FamilySpec {
    /// Vertex count implied by the parameters (no validation).
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match *self {
            Path(n) | Cycle(n) | Complete(n) | Empty(n) | CyclePower(n, _) => n,
            CompleteBipartite(a, b) => a.saturating_add(b),
            Star(k) => k.saturating_add(1),
            TrianglePaths(j, k, l) => 3usize.saturating_add(j).saturating_add(k).saturating_add(l),
            CycleChord(k, l) => k.saturating_add(l),
            Pentagon(k, l) => 5usize.saturating_add(k).saturating_add(l),
            TriBase(t, _) => t.saturating_mul(3).saturating_add(3),
            Join(ref a, ref b) => a.order().saturating_add(b.order()),
            Figure(f) => f.edges().0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            Path(n) | Complete(n) | Empty(n) if *n == 0 => return Err(bad(self, "order must be ≥ 1")),
            Cycle(n) if *n < 3 => return Err(bad(self, "cycle order must be ≥ 3")),
            CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                return Err(bad(self, "both parts must be nonempty"))
            }
            CycleChord(k, _) if *k < 4 => return Err(bad(self, "cycle length k must be ≥ 4")),
            TriBase(_, v) if *v != 2 && *v != 3 => return Err(bad(self, "variant must be 2 or 3")),
            TriBase(0, _) => return Err(bad(self, "path length t must be ≥ 1")),
            CyclePower(n, k) => {
                if *n < 3 {
                    return Err(bad(self, "cycle order must be ≥ 3"));
                }
                if *k < 1 || *k > n / 2 {
                    return Err(bad(self, "power k must satisfy 1 ≤ k ≤ ⌊n/2⌋"));
                }
            }
            Join(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            _ => {}
        }
        let n = self.order();
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                what: "family order",
                limit: MAX_ORDER,
                got: n,
            });
        }
        Ok(())
    }

    /// Vertices carrying a diagonal shift when this spec is a gluing base.
    pub fn marked(&self) -> Vec<usize> {
        match *self {
            FamilySpec::TriBase(t, 2) => vec![2 * t + 2, 3 * t + 2],
            FamilySpec::TriBase(t, _) => vec![t + 2, 2 * t + 2, 3 * t + 2],
            FamilySpec::Figure(f) => f.marked().to_vec(),
            _ => Vec::new(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        let g = match *self {
            Path(n) => Graph::from_fn(n, |u, v| v == u + 1)?,
            Cycle(n) => Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))?,
            Complete(n) => Graph::from_fn(n, |_, _| true)?,
            Empty(n) => Graph::empty(n)?,
            CompleteBipartite(a, b) => Graph::from_fn(a + b, |u, v| u < a && v >= a)?,
            Star(k) => Graph::from_fn(k + 1, |u, _| u == 0)?,
            TrianglePaths(j, k, l) => triangle_paths(j, k, l)?,
            TriBase(t, _) => triangle_paths(t, t, t)?,
            CycleChord(k, l) => {
                let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                edges.push((0, 2));
                let mut prev = 1;
                for v in k..k + l {
                    edges.push((prev, v));
                    prev = v;
                }
                Graph::from_edges(k + l, &edges)?
            }
            Pentagon(k, l) => {
                let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                edges.extend((5..5 + k).map(|v| (0, v)));
                edges.extend((5 + k..5 + k + l).map(|v| (2, v)));
                Graph::from_edges(5 + k + l, &edges)?
            }
            Join(ref a, ref b) => Graph::join(&a.build()?, &b.build()?)?,
            CyclePower(n, k) => Graph::from_fn(n, |u, v| {
                let d = v - u;
                d.min(n - d) <= k
            })?,
            Figure(f) => {
                let (n, edges) = f.edges();
                Graph::from_edges(n, &edges)?
            }
        };
        Ok(g.with_label(self.to_string()))
    }
}

fn triangle_paths(j: usize, k: usize, l: usize) -> Result<Graph> {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut next = 3;
    for (root, len) in [(0, j), (1, k), (2, l)] {
        let mut prev = root;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            Empty(n) => write!(f, "empty({n})"),
            CompleteBipartite(a, b) => write!(f, "bipartite({a},{b})"),
            Star(k) => write!(f, "star({k})"),
            TrianglePaths(j, k, l) => write!(f, "tripaths({j},{k},{l})"),
            CycleChord(k, l) => write!(f, "cyclechord({k},{l})"),
            Pentagon(k, l) => write!(f, "pentagon({k},{l})"),
            TriBase(t, v) => write!(f, "tribase({t},{v})"),
            Join(a, b) => write!(f, "join({a},{b})"),
            CyclePower(n, k) => write!(f, "cyclepower({n},{k})"),
            Figure(fig) => write!(f, "figure({})", fig.id()),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::FamilySyntax {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.rest.strip_prefix(c) {
            Some(r) => {
                self.rest = r;
                Ok(())
            }
            None => Err(self.fail(format!("expected `{c}` at `{}`", self.rest))),
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(self.rest.len());
        let (w, r) = self.rest.split_at(end);
        self.rest = r;
        w
    }

    fn number(&mut self) -> Result<usize> {
        let w = self.word();
        w.parse()
            .map_err(|_| self.fail(format!("expected a nonnegative integer, got `{w}`")))
    }

    fn numbers(&mut self, count: usize) -> Result<Vec<usize>> {
        self.eat('(')?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.eat(',')?;
            }
            out.push(self.number()?);
        }
        self.eat(')')?;
        Ok(out)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        use FamilySpec::*;
        let name = self.word().to_ascii_lowercase();
        let spec = match name.as_str() {
            "path" => Path(self.numbers(1)?[0]),
            "cycle" => Cycle(self.numbers(1)?[0]),
            "complete" => Complete(self.numbers(1)?[0]),
            "empty" => Empty(self.numbers(1)?[0]),
            "star" => Star(self.numbers(1)?[0]),
            "bipartite" => {
                let a = self.numbers(2)?;
                CompleteBipartite(a[0], a[1])
            }
            "tripaths" => {
                let a = self.numbers(3)?;
                TrianglePaths(a[0], a[1], a[2])
            }
            "cyclechord" => {
                let a = self.numbers(2)?;
                CycleChord(a[0], a[1])
            }
            "pentagon" => {
                let a = self.numbers(2)?;
                Pentagon(a[0], a[1])
            }
            "tribase" => {
                let a = self.numbers(2)?;
                let v = u8::try_from(a[1]).map_err(|_| self.fail("variant must be 2 or 3"))?;
                TriBase(a[0], v)
            }
            "cyclepower" => {
                let a = self.numbers(2)?;
                CyclePower(a[0], a[1])
            }
            "join" => {
                self.eat('(')?;
                let a = self.spec()?;
                self.eat(',')?;
                let b = self.spec()?;
                self.eat(')')?;
                Join(Box::new(a), Box::new(b))
            }
            "figure" => {
                self.eat('(')?;
                let id = self.word();
                let fig = crate::family::Figure::from_id(id).ok_or_else(|| self.fail(format!("unknown figure `{id}`")))?;
                self.eat(')')?;
                Figure(fig)
            }
            "" => return Err(self.fail("expected a family name")),
            other => return Err(self.fail(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `Display` syntax, e.g. `tripaths(1,2,3)` or
    /// `join(cycle(4),empty(2))`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut p = Parser { input: s, rest: s };
        let spec = p.spec()?;
        p.skip_ws();
        if !p.rest.is_empty() {
            return Err(p.fail(format!("trailing input `{}`", p.rest)));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::Figure as Fig;
    use FamilySpec::*;

    fn build(s: FamilySpec) -> Graph {
        s.build().unwrap()
    }

    #[test]
    fn small_families() {
        let k3 = build(Complete(3));
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let g0 = build(TrianglePaths(1, 0, 0));
        assert_eq!((g0.n(), g0.m()), (4, 4));
        assert_eq!(build(CyclePower(7, 3)), build(Complete(7)));
        assert_eq!(build(Star(4)).degrees(), vec![4, 1, 1, 1, 1]);
        assert_eq!(build(CompleteBipartite(2, 3)).m(), 6);
    }

    #[test]
    fn orders_and_sizes_follow_counts() {
        for (j, k, l) in [(0, 0, 0), (3, 1, 4), (5, 0, 2)] {
            let g = build(TrianglePaths(j, k, l));
            assert_eq!(g.n(), 3 + j + k + l);
            assert_eq!(g.m(), 3 + j + k + l);
        }
        for (k, l) in [(4, 0), (7, 3)] {
            let g = build(CycleChord(k, l));
            assert_eq!((g.n(), g.m()), (k + l, k + 1 + l));
        }
        for (k, l) in [(0, 0), (3, 2)] {
            let g = build(Pentagon(k, l));
            assert_eq!((g.n(), g.m()), (5 + k + l, 5 + k + l));
        }
        for t in [1, 4] {
            assert_eq!(build(TriBase(t, 3)).n(), 3 * t + 3);
        }
        let g = build(CyclePower(40, 16));
        assert!(g.degrees().iter().all(|&d| d == 32));
    }

    #[test]
    fn triangle_path_numbering() {
        let g = build(TrianglePaths(2, 1, 1));
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 5), (2, 6), (3, 4)]
        );
        assert_eq!(TriBase(2, 2).marked(), vec![6, 8]);
        assert_eq!(TriBase(2, 3).marked(), vec![4, 6, 8]);
    }

    #[test]
    fn figures_have_documented_shape() {
        let expect = [
            ("1", 4, 4),
            ("2a", 6, 6),
            ("2b", 6, 6),
            ("3a", 9, 9),
            ("3b", 5, 5),
            ("4", 7, 8),
            ("5a", 7, 8),
            ("5b", 9, 9),
            ("6a", 5, 5),
            ("6b", 9, 11),
        ];
        for (id, n, m) in expect {
            let g = build(Figure(Fig::from_id(id).unwrap()));
            assert_eq!((g.n(), g.m()), (n, m), "figure {id}");
            assert!(g.is_connected());
        }
        assert_eq!(build(Figure(Fig::BaseTriangle)), build(TrianglePaths(1, 0, 0)));
        assert_eq!(build(Figure(Fig::PentagonLeaves)), build(Pentagon(2, 2)));
        assert_eq!(build(Figure(Fig::TriangleTwoPendants)), build(TrianglePaths(1, 1, 0)));
        assert_eq!(build(Figure(Fig::TriBaseTwo)), build(TriBase(1, 2)));
    }

    #[test]
    fn parameter_errors_name_the_constraint() {
        let e = CycleChord(3, 0).build().unwrap_err().to_string();
        assert!(e.contains("k must be ≥ 4"), "{e}");
        assert!(CyclePower(10, 6).build().is_err());
        assert!(CyclePower(10, 0).build().is_err());
        assert!(TriBase(3, 4).build().is_err());
        assert!(TriBase(0, 3).build().is_err());
        assert!(Cycle(2).build().is_err());
        assert!(matches!(Path(20_000).build(), Err(Error::Capacity { .. })));
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "path(5)",
            "cycle(7)",
            "complete(3)",
            "empty(2)",
            "bipartite(3,3)",
            "star(4)",
            "tripaths(1,2,3)",
            "cyclechord(4,2)",
            "pentagon(1,1)",
            "tribase(10,3)",
            "cyclepower(40,16)",
            "figure(3a)",
            "join(cycle(4),empty(2))",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let spaced: FamilySpec = " join( complete(1) , path(4) ) ".parse().unwrap();
        assert_eq!(spaced.build().unwrap().m(), 7);
        assert!("path(".parse::<FamilySpec>().is_err());
        assert!("path(3)x".parse::<FamilySpec>().is_err());
        assert!("hexagon(3)".parse::<FamilySpec>().is_err());
        assert!("figure(9z)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn deterministic() {
        let s: FamilySpec = "join(cycle(6),empty(2))".parse().unwrap();
        assert_eq!(s.build().unwrap().adjacency_matrix(), s.build().unwrap().adjacency_matrix());
    }
}
