//! Finite quivers and their path words.
//!
//! Composition is read left to right: the word `ab` means traverse `a` and
//! then `b`, and requires `target(a) = source(b)`.

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Build a quiver from vertex names and `(arrow, from, to)` triples.
    /// Names must be unique and endpoints must be declared vertices.
    /// Quivers with no arrows or with isolated vertices are legal.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, Error> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Input(format!("duplicate vertex name {v:?}")));
            }
        }
        let vertex_index = |name: &str| -> Result<usize, Error> {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Input(format!("unknown vertex {name:?}")))
        };
        let mut arrow_names = std::collections::BTreeSet::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            if seen.contains(&name) || !arrow_names.insert(name.clone()) {
                return Err(Error::Input(format!("duplicate name {name:?}")));
            }
            built.push(Arrow {
                source: vertex_index(&from)?,
                target: vertex_index(&to)?,
                name,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: built,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn has_loop(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    /// All composable words of length `d`, ordered lexicographically by
    /// their arrow-name sequences. `d = 0` yields the trivial paths in
    /// vertex order.
    pub fn path_basis(&self, d: usize) -> Vec<PathWord> {
        if d == 0 {
            return (0..self.vertices.len())
                .map(|v| PathWord {
                    arrows: Vec::new(),
                    source: v,
                    target: v,
                })
                .collect();
        }
        // arrow indices sorted by name so that extension order is lexicographic
        let mut by_name: Vec<usize> = (0..self.arrows.len()).collect();
        by_name.sort_by(|&a, &b| self.arrows[a].name.cmp(&self.arrows[b].name));

        let mut words: Vec<PathWord> = by_name
            .iter()
            .map(|&i| PathWord {
                arrows: vec![i],
                source: self.arrows[i].source,
                target: self.arrows[i].target,
            })
            .collect();
        for _ in 1..d {
            let mut next = Vec::new();
            for w in &words {
                for &i in &by_name {
                    if self.arrows[i].source == w.target {
                        let mut arrows = w.arrows.clone();
                        arrows.push(i);
                        next.push(PathWord {
                            arrows,
                            source: w.source,
                            target: self.arrows[i].target,
                        });
                    }
                }
            }
            words = next;
        }
        words
    }

    pub fn path_name(&self, w: &PathWord) -> String {
        if w.arrows.is_empty() {
            format!("e_{}", self.vertices[w.source])
        } else {
            w.arrows
                .iter()
                .map(|&i| self.arrows[i].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A composable word of arrows; the empty word is the trivial path at its
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWord {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl PathWord {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenate two words when the endpoints compose.
    pub fn compose(&self, other: &PathWord) -> Option<PathWord> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord {
            arrows,
            source: self.source,
            target: other.target,
        })
    }
}

/// Diagram family shorthands accepted in input documents. Orientations are
/// fixed as documented on each arm; `expand_preset` returns the quiver the
/// shorthand stands for.
///
/// - `A_n`: linear orientation `1 -> 2 -> ... -> n`.
/// - `D_n`: fork `1 -> 3`, `2 -> 3`, then chain `3 -> 4 -> ... -> n`.
/// - `E_6`, `E_7`, `E_8`: chain `1 -> ... -> (n-1)` with branch arrow
///   `b: n -> 3`.
/// - `tilde_A_n`: oriented cycle on vertices `0..n` (so `n+1` vertices).
/// - `kronecker`: double arrow `a, b: 1 -> 2` (same underlying graph as
///   `tilde_A_1`).
pub fn expand_preset(name: &str) -> Result<Quiver, Error> {
    let linear = |n: usize| -> Result<Quiver, Error> {
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Quiver::new(vertices, arrows)
    };
    if name == "kronecker" {
        return Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "1".into(), "2".into()),
            ],
        );
    }
    if let Some(n) = name.strip_prefix("A_") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Input(format!("bad preset {name:?}")))?;
        if n == 0 {
            return Err(Error::Input("A_n requires n >= 1".into()));
        }
        return linear(n);
    }
    if let Some(n) = name.strip_prefix("D_") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Input(format!("bad preset {name:?}")))?;
        if n < 4 {
            return Err(Error::Input("D_n requires n >= 4".into()));
        }
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows = vec![
            ("a1".to_string(), "1".to_string(), "3".to_string()),
            ("a2".to_string(), "2".to_string(), "3".to_string()),
        ];
        for i in 3..n {
            arrows.push((format!("a{i}"), i.to_string(), (i + 1).to_string()));
        }
        return Quiver::new(vertices, arrows);
    }
    if let Some(n) = name.strip_prefix("E_") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Input(format!("bad preset {name:?}")))?;
        if !(6..=8).contains(&n) {
            return Err(Error::Input("E_n requires n in 6..=8".into()));
        }
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        for i in 1..n - 1 {
            arrows.push((format!("a{i}"), i.to_string(), (i + 1).to_string()));
        }
        arrows.push(("b".to_string(), n.to_string(), "3".to_string()));
        return Quiver::new(vertices, arrows);
    }
    if let Some(n) = name.strip_prefix("tilde_A_") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Input(format!("bad preset {name:?}")))?;
        if n == 0 {
            return Err(Error::Input("tilde_A_n requires n >= 1".into()));
        }
        let vertices: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let arrows = (0..=n)
            .map(|i| {
                (
                    format!("a{i}"),
                    i.to_string(),
                    ((i + 1) % (n + 1)).to_string(),
                )
            })
            .collect();
        return Quiver::new(vertices, arrows);
    }
    Err(Error::Input(format!("unknown preset {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap()
    }

    #[test]
    fn trivial_paths_in_vertex_order() {
        let q = a2();
        let basis = q.path_basis(0);
        assert_eq!(basis.len(), 2);
        assert_eq!((basis[0].source, basis[0].target), (0, 0));
        assert_eq!((basis[1].source, basis[1].target), (1, 1));
    }

    #[test]
    fn no_composable_pairs_in_a2() {
        assert!(a2().path_basis(2).is_empty());
    }

    #[test]
    fn loop_powers() {
        let q = Quiver::new(
            vec!["v".into()],
            vec![("alpha".into(), "v".into(), "v".into())],
        )
        .unwrap();
        let basis = q.path_basis(3);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].arrows, vec![0, 0, 0]);
    }

    #[test]
    fn lexicographic_word_order() {
        let q = expand_preset("kronecker").unwrap();
        let basis = q.path_basis(1);
        let names: Vec<String> = basis.iter().map(|w| q.path_name(w)).collect();
        assert_eq!(names, vec!["a", "b"]);
    }

    #[test]
    fn rejects_duplicate_and_unknown_names() {
        assert!(Quiver::new(vec!["1".into(), "1".into()], vec![]).is_err());
        assert!(Quiver::new(
            vec!["1".into()],
            vec![("a".into(), "1".into(), "2".into())]
        )
        .is_err());
        assert!(Quiver::new(
            vec!["1".into()],
            vec![
                ("a".into(), "1".into(), "1".into()),
                ("a".into(), "1".into(), "1".into())
            ]
        )
        .is_err());
    }

    #[test]
    fn presets_expand() {
        assert_eq!(expand_preset("A_3").unwrap().arrow_count(), 2);
        assert_eq!(expand_preset("D_4").unwrap().arrow_count(), 3);
        assert_eq!(expand_preset("E_6").unwrap().vertex_count(), 6);
        let t1 = expand_preset("tilde_A_1").unwrap();
        assert_eq!((t1.vertex_count(), t1.arrow_count()), (2, 2));
        assert!(expand_preset("B_2").is_err());
    }
}
