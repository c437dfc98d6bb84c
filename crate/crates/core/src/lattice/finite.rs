use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// Largest carrier accepted by any constructor.
pub const MAX_CARRIER: usize = 1 << 12;

/// A finite bounded lattice given by explicit order, join and meet tables.
///
/// Elements are addressed by their index into the carrier. Tables are
/// stored row-major; entries fit in `u16` because carriers are capped at
/// [`MAX_CARRIER`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    join: Vec<u16>,
    meet: Vec<u16>,
    top: usize,
    bottom: usize,
}

fn check_size(n: usize) -> Result<(), LatticeError> {
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > MAX_CARRIER {
        return Err(LatticeError::TooLarge {
            size: n,
            cap: MAX_CARRIER,
        });
    }
    Ok(())
}

fn set_label(mask: usize, n: u32) -> String {
    let members: Vec<String> = (0..=n)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

impl FiniteLattice {
    /// Builds a lattice from a partial order, computing joins and meets by
    /// brute force. Cubic in the carrier size; meant for small lattices.
    pub fn from_order<F>(labels: Vec<String>, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        check_size(n)?;
        let mut table = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = leq(a, b);
            }
        }
        let le = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if !le(a, a) {
                return Err(LatticeError::NotPartialOrder(format!(
                    "{} is not ≤ itself",
                    labels[a]
                )));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(LatticeError::NotPartialOrder(format!(
                        "{} and {} are mutually ≤",
                        labels[a], labels[b]
                    )));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(LatticeError::NotPartialOrder(format!(
                            "transitivity fails at {}, {}, {}",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut join = vec![0u16; n * n];
        let mut meet = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&c| upper.iter().all(|&d| le(c, d)))
                    .ok_or_else(|| LatticeError::MissingBound {
                        kind: "join",
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    })?;
                let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&c| lower.iter().all(|&d| le(d, c)))
                    .ok_or_else(|| LatticeError::MissingBound {
                        kind: "meet",
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    })?;
                join[a * n + b] = lub as u16;
                meet[a * n + b] = glb as u16;
            }
        }
        let top = (0..n).find(|&t| (0..n).all(|a| le(a, t))).expect("joins exist");
        let bottom = (0..n).find(|&z| (0..n).all(|a| le(z, a))).expect("meets exist");
        Ok(FiniteLattice {
            labels,
            leq: table,
            join,
            meet,
            top,
            bottom,
        })
    }

    /// Builds a lattice from explicit operations without searching for
    /// bounds. The caller vouches that `join`/`meet` are the least upper and
    /// greatest lower bounds of `leq`; [`check_laws`](Self::check_laws) can
    /// verify the result.
    pub fn from_operations<L, J, M>(
        labels: Vec<String>,
        leq: L,
        join: J,
        meet: M,
    ) -> Result<Self, LatticeError>
    where
        L: Fn(usize, usize) -> bool,
        J: Fn(usize, usize) -> usize,
        M: Fn(usize, usize) -> usize,
    {
        let n = labels.len();
        check_size(n)?;
        let mut le = vec![false; n * n];
        let mut jt = vec![0u16; n * n];
        let mut mt = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                le[a * n + b] = leq(a, b);
                let (j, m) = (join(a, b), meet(a, b));
                if j >= n || m >= n {
                    return Err(LatticeError::UnknownElement(format!("{j} or {m}")));
                }
                jt[a * n + b] = j as u16;
                mt[a * n + b] = m as u16;
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|a| le[a * n + t]))
            .ok_or_else(|| LatticeError::NotPartialOrder("no maximum element".into()))?;
        let bottom = (0..n)
            .find(|&z| (0..n).all(|a| le[z * n + a]))
            .ok_or_else(|| LatticeError::NotPartialOrder("no minimum element".into()))?;
        Ok(FiniteLattice {
            labels,
            leq: le,
            join: jt,
            meet: mt,
            top,
            bottom,
        })
    }

    /// Subsets of `{0, …, n}` under inclusion. Element `i` is the subset
    /// whose characteristic bitmask is `i`.
    pub fn power_set(n: u32) -> Result<Self, LatticeError> {
        let size = 1usize
            .checked_shl(n + 1)
            .filter(|&s| s <= MAX_CARRIER)
            .ok_or(LatticeError::TooLarge {
                size: usize::MAX,
                cap: MAX_CARRIER,
            })?;
        let labels = (0..size).map(|m| set_label(m, n)).collect();
        Self::from_operations(labels, |a, b| a & !b == 0, |a, b| a | b, |a, b| a & b)
    }

    /// The two-element lattice `{bottom < top}`.
    pub fn two_element(bottom: &str, top: &str) -> Self {
        Self::from_operations(
            vec![bottom.to_string(), top.to_string()],
            |a, b| a <= b,
            |a, b| a.max(b),
            |a, b| a.min(b),
        )
        .expect("two-element lattice")
    }

    /// The chain `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> Result<Self, LatticeError> {
        let labels = (0..k).map(|i| i.to_string()).collect();
        Self::from_operations(labels, |a, b| a <= b, usize::max, usize::min)
    }

    /// The diamond M3: bottom, three pairwise incomparable atoms, top.
    pub fn diamond() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_order(labels, |x, y| x == y || x == 0 || y == 4).expect("M3 is a lattice")
    }

    /// The pentagon N5: `0 < a < b < 1` and `0 < c < 1`.
    pub fn pentagon() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_order(labels, |x, y| x == y || x == 0 || y == 4 || (x == 1 && y == 2))
            .expect("N5 is a lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    /// Exhaustively verifies that the order is a partial order, that join
    /// and meet are its bounds, and the commutative, associative,
    /// idempotent and absorption laws. Cubic in the carrier size.
    pub fn check_laws(&self) -> Result<(), LatticeError> {
        let n = self.len();
        let fail = |msg: String| Err(LatticeError::LawViolation(msg));
        for a in 0..n {
            if !self.leq(a, a) {
                return fail(format!("reflexivity at {}", self.label(a)));
            }
            if self.join(a, a) != a || self.meet(a, a) != a {
                return fail(format!("idempotence at {}", self.label(a)));
            }
            if !self.leq(self.bottom, a) || !self.leq(a, self.top) {
                return fail(format!("bounds at {}", self.label(a)));
            }
            for b in 0..n {
                let (j, m) = (self.join(a, b), self.meet(a, b));
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return fail(format!("antisymmetry at {}, {}", self.label(a), self.label(b)));
                }
                if j != self.join(b, a) || m != self.meet(b, a) {
                    return fail(format!("commutativity at {}, {}", self.label(a), self.label(b)));
                }
                if self.join(a, m) != a || self.meet(a, j) != a {
                    return fail(format!("absorption at {}, {}", self.label(a), self.label(b)));
                }
                if !(self.leq(a, j) && self.leq(b, j) && self.leq(m, a) && self.leq(m, b)) {
                    return fail(format!("bounds of {}, {}", self.label(a), self.label(b)));
                }
                if self.leq(a, b) != (j == b) {
                    return fail(format!("order/join mismatch at {}, {}", self.label(a), self.label(b)));
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return fail(format!("transitivity at {}", self.label(a)));
                    }
                    if self.join(a, self.join(b, c)) != self.join(j, c)
                        || self.meet(a, self.meet(b, c)) != self.meet(m, c)
                    {
                        return fail(format!(
                            "associativity at {}, {}, {}",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// All complements of `x`.
    pub fn complements(&self, x: usize) -> Vec<usize> {
        self.elements()
            .filter(|&y| self.meet(x, y) == self.bottom && self.join(x, y) == self.top)
            .collect()
    }

    /// The complement of `x`, if it has one. Several complements can only
    /// occur in a non-distributive lattice and are reported as an error.
    pub fn complement_of(&self, x: usize) -> Result<Option<usize>, LatticeError> {
        if x >= self.len() {
            return Err(LatticeError::UnknownElement(x.to_string()));
        }
        match self.complements(x).as_slice() {
            [] => Ok(None),
            [y] => Ok(Some(*y)),
            many => Err(LatticeError::AmbiguousComplement {
                element: self.label(x).to_string(),
                count: many.len(),
            }),
        }
    }

    pub fn is_complemented(&self) -> bool {
        self.elements().all(|x| !self.complements(x).is_empty())
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.is_complemented()
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Serialized form: carrier labels, order pairs, and the bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub carrier: Vec<String>,
    pub leq: Vec<(String, String)>,
    pub top: String,
    pub bottom: String,
}

impl From<&FiniteLattice> for LatticeJson {
    fn from(lat: &FiniteLattice) -> Self {
        let mut leq = Vec::new();
        for a in lat.elements() {
            for b in lat.elements() {
                if lat.leq(a, b) {
                    leq.push((lat.label(a).to_string(), lat.label(b).to_string()));
                }
            }
        }
        LatticeJson {
            carrier: lat.labels.clone(),
            leq,
            top: lat.label(lat.top).to_string(),
            bottom: lat.label(lat.bottom).to_string(),
        }
    }
}

impl TryFrom<LatticeJson> for FiniteLattice {
    type Error = LatticeError;

    fn try_from(json: LatticeJson) -> Result<Self, LatticeError> {
        let index: HashMap<&str, usize> = json
            .carrier
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let n = json.carrier.len();
        let mut pairs = vec![false; n * n];
        for (a, b) in &json.leq {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| LatticeError::UnknownElement(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| LatticeError::UnknownElement(b.clone()))?;
            pairs[ia * n + ib] = true;
        }
        let lat = FiniteLattice::from_order(json.carrier.clone(), |a, b| pairs[a * n + b])?;
        if lat.label(lat.top) != json.top || lat.label(lat.bottom) != json.bottom {
            return Err(LatticeError::NotPartialOrder("declared bounds disagree".into()));
        }
        Ok(lat)
    }
}
