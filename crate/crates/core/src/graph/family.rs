use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::Graph;

/// Named graph families, mostly the extremal graphs of the energy bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    /// `k` disjoint copies of K2.
    MatchingUnion(usize),
    Petersen,
    /// `n` isolated vertices; padding for disjoint unions.
    Empty(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyParseError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` expects {expected} parameter(s), got {got}")]
    Arity { family: String, expected: usize, got: usize },
    #[error("invalid parameter `{0}`")]
    BadParameter(String),
    #[error("family parameters must be positive")]
    NonPositive,
    #[error("a cycle needs at least 3 vertices")]
    ShortCycle,
}

impl GraphFamily {
    pub fn generate(self) -> Result<Graph, FamilyParseError> {
        self.validate()?;
        let graph = match self {
            Self::Complete(n) => Graph::new(n, super::upper_pairs(n)),
            Self::CompleteBipartite(a, b) => {
                Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            Self::Cycle(n) => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
            Self::Path(n) => Graph::new(n, (1..n).map(|i| (i - 1, i))),
            Self::MatchingUnion(k) => Graph::new(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))),
            Self::Petersen => Graph::new(10, petersen_edges()),
            Self::Empty(n) => Graph::new(n, []),
        };
        Ok(graph.expect("family generators produce valid edges"))
    }

    fn validate(self) -> Result<(), FamilyParseError> {
        let params: &[usize] = match &self {
            Self::Complete(n) | Self::Path(n) | Self::Empty(n) | Self::Cycle(n) => {
                std::slice::from_ref(n)
            }
            Self::MatchingUnion(k) => std::slice::from_ref(k),
            Self::CompleteBipartite(a, b) => &[*a, *b],
            Self::Petersen => &[],
        };
        if params.contains(&0) {
            return Err(FamilyParseError::NonPositive);
        }
        if let Self::Cycle(n) = self {
            if n < 3 {
                return Err(FamilyParseError::ShortCycle);
            }
        }
        Ok(())
    }

    /// Degree every vertex has, for the regular families.
    pub fn regular_degree(self) -> Option<usize> {
        match self {
            Self::Complete(n) => Some(n - 1),
            Self::CompleteBipartite(a, b) if a == b => Some(a),
            Self::Cycle(_) => Some(2),
            Self::Path(1) | Self::Empty(_) => Some(0),
            Self::Path(2) | Self::MatchingUnion(_) => Some(1),
            Self::Petersen => Some(3),
            _ => None,
        }
    }
}

/// Kneser graph K(5, 2): 2-subsets of {0..5}, adjacent when disjoint.
fn petersen_edges() -> Vec<(usize, usize)> {
    let subsets: Vec<u8> = (0..5u8)
        .flat_map(|i| (i + 1..5).map(move |j| (1 << i) | (1 << j)))
        .collect();
    let mut edges = Vec::with_capacity(15);
    for (a, sa) in subsets.iter().enumerate() {
        for (b, sb) in subsets.iter().enumerate().skip(a + 1) {
            if sa & sb == 0 {
                edges.push((a, b));
            }
        }
    }
    edges
}

impl FromStr for GraphFamily {
    type Err = FamilyParseError;

    /// Parses `name:params`, e.g. `complete:4`, `bipartite:3:3`, `petersen`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default().to_ascii_lowercase();
        let params = parts
            .map(|p| p.trim().parse::<usize>().map_err(|_| FamilyParseError::BadParameter(p.into())))
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(FamilyParseError::Arity { family: name.clone(), expected, got: params.len() })
            }
        };
        let family = match name.as_str() {
            "complete" => arity(1).map(|_| Self::Complete(params[0])),
            "bipartite" => arity(2).map(|_| Self::CompleteBipartite(params[0], params[1])),
            "cycle" => arity(1).map(|_| Self::Cycle(params[0])),
            "path" => arity(1).map(|_| Self::Path(params[0])),
            "matching" => arity(1).map(|_| Self::MatchingUnion(params[0])),
            "petersen" => arity(0).map(|_| Self::Petersen),
            "empty" => arity(1).map(|_| Self::Empty(params[0])),
            _ => Err(FamilyParseError::UnknownFamily(name.clone())),
        }?;
        family.validate()?;
        Ok(family)
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::CompleteBipartite(a, b) => write!(f, "bipartite:{a}:{b}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Path(n) => write!(f, "path:{n}"),
            Self::MatchingUnion(k) => write!(f, "matching:{k}"),
            Self::Petersen => write!(f, "petersen"),
            Self::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().generate().unwrap()
    }

    #[test]
    fn complete_five() {
        let g = gen("complete:5");
        assert!(g.is_regular());
        assert_eq!(g.min_degree(), 4);
        assert_eq!(g.size(), 10);
    }

    #[test]
    fn five_cycle() {
        let g = gen("cycle:5");
        assert_eq!((g.min_degree(), g.max_degree(), g.size()), (2, 2, 5));
        assert!(g.is_connected());
    }

    /// Length of the shortest cycle through any vertex, by BFS from each vertex.
    fn girth(g: &Graph) -> Option<usize> {
        let n = g.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in g.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn petersen_is_cubic_with_girth_five() {
        let g = gen("petersen");
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert_eq!((g.min_degree(), g.max_degree()), (3, 3));
        assert_eq!(girth(&g), Some(5));
        assert_eq!(girth(&gen("cycle:5")), Some(5));
        assert_eq!(girth(&gen("complete:4")), Some(3));
    }

    #[test]
    fn matching_union_matches_repeated_union() {
        let k2 = gen("complete:2");
        let three = k2.disjoint_union(&k2).disjoint_union(&k2);
        assert_eq!(three, gen("matching:3"));
        assert_eq!(k2.disjoint_union(&k2), gen("matching:2"));
    }

    #[test]
    fn regular_metadata_agrees_with_degrees() {
        let families = [
            GraphFamily::Complete(1),
            GraphFamily::Complete(6),
            GraphFamily::CompleteBipartite(1, 3),
            GraphFamily::CompleteBipartite(3, 3),
            GraphFamily::Cycle(7),
            GraphFamily::Path(1),
            GraphFamily::Path(2),
            GraphFamily::Path(5),
            GraphFamily::MatchingUnion(4),
            GraphFamily::Petersen,
            GraphFamily::Empty(3),
        ];
        for family in families {
            let g = family.generate().unwrap();
            assert_eq!(g.is_regular(), family.regular_degree().is_some(), "{family}");
            if let Some(r) = family.regular_degree() {
                assert_eq!(g.min_degree(), r, "{family}");
            }
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!("cycle:0".parse::<GraphFamily>(), Err(FamilyParseError::NonPositive));
        assert_eq!("cycle:2".parse::<GraphFamily>(), Err(FamilyParseError::ShortCycle));
        assert!(matches!("wheel:5".parse::<GraphFamily>(), Err(FamilyParseError::UnknownFamily(_))));
        assert!(matches!("bipartite:3".parse::<GraphFamily>(), Err(FamilyParseError::Arity { .. })));
        assert!(matches!("path:x".parse::<GraphFamily>(), Err(FamilyParseError::BadParameter(_))));
        assert_eq!(GraphFamily::Complete(0).generate(), Err(FamilyParseError::NonPositive));
    }

    #[test]
    fn display_round_trips() {
        for s in ["complete:4", "bipartite:2:3", "cycle:5", "path:3", "matching:2", "petersen", "empty:2"] {
            assert_eq!(s.parse::<GraphFamily>().unwrap().to_string(), s);
        }
    }
}
