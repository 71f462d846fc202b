//! Finite groups given by Cayley tables.
//!
//! All group axioms are verified at construction: a declared identity, full
//! associativity, and two-sided inverses. Groups here are small (the toolkit
//! targets |G| up to a few dozen), so the cubic associativity sweep is cheap.

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self, Error> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Input("group must be nonempty".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(Error::Input(format!("duplicate group element {name:?}")));
            }
        }
        if identity >= n {
            return Err(Error::Input("identity index out of range".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Input("Cayley table has wrong shape".into()));
        }
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(Error::Input("Cayley table entry out of range".into()));
                }
            }
        }
        for i in 0..n {
            if table[identity][i] != i || table[i][identity] != i {
                return Err(Error::Input(format!(
                    "identity axiom fails at element {:?}",
                    names[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::Input(format!(
                            "Cayley table is not associative at triple ({:?}, {:?}, {:?})",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            match (0..n).find(|&j| table[i][j] == identity && table[j][i] == identity) {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(Error::Input(format!(
                        "element {:?} has no two-sided inverse",
                        names[i]
                    )))
                }
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let names = (0..n)
            .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
            .collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroup::new(names, table, 0).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Direct product; element `(i, j)` has index `i * other.order() + j`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let names = (0..n)
            .flat_map(|i| {
                (0..m).map(move |j| format!("({},{})", self.names[i], other.names[j]))
            })
            .collect();
        let table = (0..n * m)
            .map(|x| {
                let (i1, j1) = (x / m, x % m);
                (0..n * m)
                    .map(|y| {
                        let (i2, j2) = (y / m, y % m);
                        self.mul(i1, i2) * m + other.mul(j1, j2)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(names, table, self.identity * m + other.identity)
            .expect("product of groups is a group")
    }
}
