//! Gradings, Kac–Dynkin–Vogan node data, weights and partitions.
//!
//! A grading assigns to every index `i` a pair `(p_i, c_i)` of Z2 parities:
//! `p` is the super-parity and `c` decides the sign of the conjugation
//! `E_ij* = (-1)^{c_i+c_j} E_ji`.

use std::fmt;
use std::ops::Add;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_u8(v: u8) -> Parity {
        if v % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }

    /// `(-1)^self`
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_u8(self.bit() + o.bit())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub p: Parity,
    pub c: Parity,
}

impl Slot {
    pub const fn new(p: Parity, c: Parity) -> Slot {
        Slot { p, c }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub size: usize,
    pub p: u8,
    pub c: u8,
}

/// Ordered `(p, c)` assignment, one entry per index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    slots: Vec<Slot>,
}

#[derive(Serialize, Deserialize)]
struct GradingJson {
    blocks: Vec<Block>,
}

impl Serialize for Grading {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GradingJson { blocks: self.blocks() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Grading {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Blocks(GradingJson),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_grading(&t).map_err(serde::de::Error::custom),
            Raw::Blocks(b) => {
                let blocks: Vec<(usize, u8, u8)> = b.blocks.iter().map(|b| (b.size, b.p, b.c)).collect();
                Grading::from_blocks(&blocks).map_err(serde::de::Error::custom)
            }
        }
    }
}

impl Grading {
    pub fn from_slots(slots: Vec<Slot>) -> Result<Grading> {
        if slots.len() < 2 {
            return Err(Error::Grading("a grading needs at least two indices".into()));
        }
        Ok(Grading { slots })
    }

    /// Blocks given as `(size, p, c)`.
    pub fn from_blocks(blocks: &[(usize, u8, u8)]) -> Result<Grading> {
        let mut slots = Vec::new();
        for &(size, p, c) in blocks {
            if size == 0 {
                return Err(Error::Grading("zero block size".into()));
            }
            if p > 1 || c > 1 {
                return Err(Error::Grading(format!("parities must be 0 or 1, got ({p},{c})")));
            }
            slots.extend(std::iter::repeat(Slot::new(Parity::from_u8(p), Parity::from_u8(c))).take(size));
        }
        Grading::from_slots(slots)
    }

    /// The `su(p,|m|q)` grading: `p` c-odd bosons, `m` fermions, `q` bosons.
    /// For `p = 0` the fermions open the sequence; for `m = 0` this is `su(p,q)`.
    pub fn supmq(p: usize, m: usize, q: usize) -> Result<Grading> {
        let mut blocks = Vec::new();
        if p > 0 {
            blocks.push((p, 0, 0));
        }
        if m > 0 {
            blocks.push((m, 1, 1));
        }
        if q > 0 {
            blocks.push((q, 0, 1));
        }
        Grading::from_blocks(&blocks)
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn p(&self, i: usize) -> Parity {
        self.slots[i].p
    }

    pub fn c(&self, i: usize) -> Parity {
        self.slots[i].c
    }

    pub fn blocks(&self) -> Vec<Block> {
        let mut out: Vec<Block> = Vec::new();
        for s in &self.slots {
            match out.last_mut() {
                Some(b) if b.p == s.p.bit() && b.c == s.c.bit() => b.size += 1,
                _ => out.push(Block { size: 1, p: s.p.bit(), c: s.c.bit() }),
            }
        }
        out
    }

    /// Counts `n_{pc}` in the order `(n00, n01, n11, n10)`.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let mut n = (0, 0, 0, 0);
        for s in &self.slots {
            match (s.p, s.c) {
                (Parity::Even, Parity::Even) => n.0 += 1,
                (Parity::Even, Parity::Odd) => n.1 += 1,
                (Parity::Odd, Parity::Odd) => n.2 += 1,
                (Parity::Odd, Parity::Even) => n.3 += 1,
            }
        }
        n
    }

    /// Global Z2 shifts of the p- and c-parities.
    pub fn shifted(&self, dp: Parity, dc: Parity) -> Grading {
        Grading { slots: self.slots.iter().map(|s| Slot::new(s.p + dp, s.c + dc)).collect() }
    }

    /// `perm[k]` is the old index placed at position `k`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Grading> {
        if !is_permutation(perm, self.len()) {
            return Err(Error::Invalid("not a permutation of the indices".into()));
        }
        Ok(Grading { slots: perm.iter().map(|&i| self.slots[i]).collect() })
    }

    pub fn swapped(&self, i: usize) -> Grading {
        let mut slots = self.slots.clone();
        slots.swap(i, i + 1);
        Grading { slots }
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &i in perm {
        if i >= n || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_grading(self))
    }
}

/// Parse `su(2,2|4)`-style notation. `,` flips c, `|` flips p, `,|` flips both;
/// the first block is `(0,0)`.
pub fn parse_grading(notation: &str) -> Result<Grading> {
    let text: String = notation.replace("\\!", "").chars().filter(|c| !c.is_whitespace()).collect();
    let inner = text
        .strip_prefix("su(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Grading(format!("expected su(...), got {notation:?}")))?;
    let bytes = inner.as_bytes();
    let mut pos = 0;
    let mut cur = Slot::new(Parity::Even, Parity::Even);
    let mut blocks = Vec::new();
    loop {
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Grading(format!("expected a block size at offset {start} in {notation:?}")));
        }
        let size: usize = inner[start..pos]
            .parse()
            .map_err(|_| Error::Grading(format!("block size too large in {notation:?}")))?;
        if size == 0 {
            return Err(Error::Grading("zero block size".into()));
        }
        blocks.push((size, cur.p.bit(), cur.c.bit()));
        if pos == bytes.len() {
            break;
        }
        let rest = &inner[pos..];
        let (dp, dc, adv) = if rest.starts_with(",|") {
            (Parity::Odd, Parity::Odd, 2)
        } else if rest.starts_with('|') {
            (Parity::Odd, Parity::Even, 1)
        } else if rest.starts_with(',') {
            (Parity::Even, Parity::Odd, 1)
        } else {
            return Err(Error::Grading(format!("unexpected separator at offset {pos} in {notation:?}")));
        };
        cur = Slot::new(cur.p + dp, cur.c + dc);
        pos += adv;
    }
    Grading::from_blocks(&blocks)
}

/// Inverse of [`parse_grading`]. Gradings whose first block is not `(0,0)` are
/// rendered after the global shift that makes it so (an equivalent grading).
pub fn render_grading(g: &Grading) -> String {
    let first = g.slots[0];
    let norm = g.shifted(first.p, first.c);
    let blocks = norm.blocks();
    let mut out = String::from("su(");
    for (k, b) in blocks.iter().enumerate() {
        if k > 0 {
            let prev = blocks[k - 1];
            let dp = prev.p != b.p;
            let dc = prev.c != b.c;
            out.push_str(match (dp, dc) {
                (true, true) => ",|",
                (true, false) => "|",
                (false, true) => ",",
                (false, false) => unreachable!("adjacent blocks always differ"),
            });
        }
        out.push_str(&b.size.to_string());
    }
    out.push(')');
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealFormSignature {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
}

impl fmt::Display for RealFormSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}|{},{})", self.p, self.q, self.r, self.s)
    }
}

/// The four representatives of a count vector under the Z2 shifts, tagged by the shift.
fn shift_representatives(g: &Grading) -> Vec<(Parity, Parity, RealFormSignature)> {
    let (p, q, r, s) = g.counts();
    vec![
        (Parity::Even, Parity::Even, RealFormSignature { p, q, r, s }),
        (Parity::Even, Parity::Odd, RealFormSignature { p: q, q: p, r: s, s: r }),
        (Parity::Odd, Parity::Even, RealFormSignature { p: s, q: r, r: q, s: p }),
        (Parity::Odd, Parity::Odd, RealFormSignature { p: r, q: s, r: p, s: q }),
    ]
}

fn canonical_sequence(sig: &RealFormSignature) -> Vec<Slot> {
    let mut v = Vec::new();
    v.extend(std::iter::repeat(Slot::new(Parity::Even, Parity::Even)).take(sig.p));
    v.extend(std::iter::repeat(Slot::new(Parity::Even, Parity::Odd)).take(sig.q));
    v.extend(std::iter::repeat(Slot::new(Parity::Odd, Parity::Odd)).take(sig.r));
    v.extend(std::iter::repeat(Slot::new(Parity::Odd, Parity::Even)).take(sig.s));
    v
}

/// Pick the representative with fewest `(1,0)` indices, then the smallest
/// `(p,c)` sequence. Only representatives with `n00 > 0` qualify.
fn best_representative(g: &Grading) -> (Parity, Parity, RealFormSignature) {
    shift_representatives(g)
        .into_iter()
        .filter(|(_, _, sig)| sig.p > 0)
        .min_by(|a, b| {
            (a.2.s, canonical_sequence(&a.2)).cmp(&(b.2.s, canonical_sequence(&b.2)))
        })
        .expect("a grading always has a representative with n00 > 0")
}

pub fn signature(g: &Grading) -> RealFormSignature {
    best_representative(g).2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    /// su(2) node: same p, same c.
    CompactEven,
    /// su(1,1) node: same p, different c.
    NonCompact,
    /// fermionic node with equal c.
    FermionicCEven,
    /// fermionic node with different c.
    FermionicCOdd,
}

impl NodeKind {
    pub fn between(a: Slot, b: Slot) -> NodeKind {
        match (a.p == b.p, a.c == b.c) {
            (true, true) => NodeKind::CompactEven,
            (true, false) => NodeKind::NonCompact,
            (false, true) => NodeKind::FermionicCEven,
            (false, false) => NodeKind::FermionicCOdd,
        }
    }

    pub fn is_p_odd(self) -> bool {
        matches!(self, NodeKind::FermionicCEven | NodeKind::FermionicCOdd)
    }

    pub fn is_c_odd(self) -> bool {
        matches!(self, NodeKind::NonCompact | NodeKind::FermionicCOdd)
    }
}

pub fn node_kinds(g: &Grading) -> Vec<NodeKind> {
    g.slots.windows(2).map(|w| NodeKind::between(w[0], w[1])).collect()
}

/// Kac–Dynkin–Vogan diagram closed by the wrap-around node between the last and first index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedDiagram {
    pub grading: Grading,
    pub nodes: Vec<NodeKind>,
}

impl ExtendedDiagram {
    pub fn p_odd_count(&self) -> usize {
        self.nodes.iter().filter(|k| k.is_p_odd()).count()
    }

    pub fn c_odd_count(&self) -> usize {
        self.nodes.iter().filter(|k| k.is_c_odd()).count()
    }

    pub fn extra_node(&self) -> NodeKind {
        *self.nodes.last().expect("extended diagram has nodes")
    }
}

pub fn extended_diagram(g: &Grading) -> ExtendedDiagram {
    let mut nodes = node_kinds(g);
    nodes.push(NodeKind::between(g.slots[g.len() - 1], g.slots[0]));
    ExtendedDiagram { grading: g.clone(), nodes }
}

/// Canonical grading with blocks `(0,0), (0,1), (1,1), (1,0)` and the
/// permutation witness (`perm[k]` = original index now at position `k`).
pub fn canonical_form(g: &Grading) -> (Grading, Vec<usize>) {
    let (dp, dc, _) = best_representative(g);
    let shifted = g.shifted(dp, dc);
    let key = |s: &Slot| match (s.p, s.c) {
        (Parity::Even, Parity::Even) => 0,
        (Parity::Even, Parity::Odd) => 1,
        (Parity::Odd, Parity::Odd) => 2,
        (Parity::Odd, Parity::Even) => 3,
    };
    let mut perm: Vec<usize> = (0..g.len()).collect();
    perm.sort_by_key(|&i| key(&shifted.slots[i]));
    let canon = shifted.permuted(&perm).expect("sorting yields a permutation");
    (canon, perm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealFormName {
    /// su(p,q|r,s)
    Su { p: usize, q: usize, r: usize, s: usize },
    /// sl(n,R|m,R)
    SlReal { n: usize, m: usize },
    /// su*(2n|2m)
    SuStar { n: usize, m: usize },
    /// psl'(n|n)
    PslPrime { n: usize },
}

/// Only su(p,q|m) (one of the two even factors compact) carries non-trivial unitary representations.
pub fn admits_nontrivial_unitary(form: RealFormName) -> bool {
    match form {
        RealFormName::Su { p, q, r, s } => p * q == 0 || r * s == 0,
        RealFormName::SlReal { .. } | RealFormName::SuStar { .. } | RealFormName::PslPrime { .. } => false,
    }
}

/// Eigenvalues of `E_ii` on a highest-weight state, tagged by the grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FundamentalWeight {
    pub grading: Grading,
    #[serde(with = "crate::rational::serde_q_vec")]
    pub m: Vec<Q>,
}

impl FundamentalWeight {
    pub fn new(grading: Grading, m: Vec<Q>) -> Result<FundamentalWeight> {
        if grading.len() != m.len() {
            return Err(Error::Dims(format!("{} weight entries for a grading of length {}", m.len(), grading.len())));
        }
        Ok(FundamentalWeight { grading, m })
    }

    pub fn zero(grading: Grading) -> FundamentalWeight {
        let n = grading.len();
        FundamentalWeight { grading, m: vec![Q::zero(); n] }
    }
}

impl fmt::Display for FundamentalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.m.iter().map(fmt_q).collect();
        write!(f, "{} [{}]", self.grading, parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinWeight {
    #[serde(with = "crate::rational::serde_q_vec")]
    pub omega: Vec<Q>,
}

/// `ω_i = m_i − (−1)^{p_i+p_{i+1}} m_{i+1}`.
pub fn dynkin_from_fundamental(w: &FundamentalWeight) -> DynkinWeight {
    let g = &w.grading;
    let omega = (0..w.m.len() - 1)
        .map(|i| {
            if g.p(i) == g.p(i + 1) {
                &w.m[i] - &w.m[i + 1]
            } else {
                &w.m[i] + &w.m[i + 1]
            }
        })
        .collect();
    DynkinWeight { omega }
}

/// Weight of the representation twisted by the outer automorphism `E_ij ↦ −E_ji`
/// (times `i` on odd generators): entries negate, and p-odd indices flip their c.
pub fn outer_dual(w: &FundamentalWeight) -> FundamentalWeight {
    let slots = w
        .grading
        .slots()
        .iter()
        .map(|s| if s.p == Parity::Odd { Slot::new(s.p, s.c.flip()) } else { *s })
        .collect();
    FundamentalWeight { grading: Grading { slots }, m: w.m.iter().map(|x| -x).collect() }
}

/// Weakly decreasing sequence of nonnegative integers. The length is kept:
/// trailing zeros denote the unused rows of a block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty(len: usize) -> Partition {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.get(0)
    }

    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// Last entry is zero (or the partition has no rows at all).
    pub fn is_proper(&self) -> bool {
        self.0.last().is_none_or(|&x| x == 0)
    }

    /// Transposed partition padded or truncated to `len` rows.
    pub fn transpose(&self, len: usize) -> Partition {
        Partition((1..=len as u32).map(|k| self.0.iter().filter(|&&x| x >= k).count() as u32).collect())
    }

    /// Extract a partition from rationals that must be nonnegative integers
    /// in weakly decreasing order.
    pub fn from_rationals(xs: &[Q]) -> Result<Partition> {
        let mut parts = Vec::with_capacity(xs.len());
        for x in xs {
            if !x.is_integer() || x.is_negative() {
                return Err(Error::Invalid(format!("{} is not a nonnegative integer", fmt_q(x))));
            }
            let v: u32 = x
                .to_integer()
                .try_into()
                .map_err(|_| Error::Invalid(format!("{} too large", fmt_q(x))))?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Role of an index inside an su(p,q|m) grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IndexKind {
    /// boson whose c differs from the fermions' c (the `p` block, dotted oscillators)
    B,
    /// fermion
    F,
    /// boson sharing the fermions' c (the `q` block)
    A,
}

/// Interpretation of a grading as su(p,q|m): which indices are fermions,
/// and which bosons belong to the `p` and `q` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperShape {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub kinds: Vec<IndexKind>,
}

impl SuperShape {
    pub fn of(g: &Grading) -> Result<SuperShape> {
        let uniform_c = |par: Parity| -> Option<Option<Parity>> {
            let cs: Vec<Parity> = g.slots().iter().filter(|s| s.p == par).map(|s| s.c).collect();
            if cs.is_empty() {
                Some(None)
            } else if cs.iter().all(|&c| c == cs[0]) {
                Some(Some(cs[0]))
            } else {
                None
            }
        };
        let has_odd = g.slots().iter().any(|s| s.p == Parity::Odd);
        let has_even = g.slots().iter().any(|s| s.p == Parity::Even);
        let (fermion, fermion_c) = if has_odd && has_even {
            if let Some(Some(c)) = uniform_c(Parity::Odd) {
                (Some(Parity::Odd), c)
            } else if let Some(Some(c)) = uniform_c(Parity::Even) {
                (Some(Parity::Even), c)
            } else {
                return Err(Error::NotAPath(format!("{g} is not an su(p,q|m) grading (both even blocks non-compact)")));
            }
        } else if g.slots().iter().all(|s| s.c == g.c(0)) {
            // compact: c = 0 reads as the p block, c = 1 as the q block
            (None, Parity::Odd)
        } else {
            // purely bosonic: the c of the first index plays the role of the b block
            (None, g.c(0).flip())
        };
        let kinds: Vec<IndexKind> = g
            .slots()
            .iter()
            .map(|s| {
                if Some(s.p) == fermion {
                    IndexKind::F
                } else if s.c == fermion_c {
                    IndexKind::A
                } else {
                    IndexKind::B
                }
            })
            .collect();
        let count = |k: IndexKind| kinds.iter().filter(|&&x| x == k).count();
        Ok(SuperShape { p: count(IndexKind::B), q: count(IndexKind::A), m: count(IndexKind::F), kinds })
    }

    /// True when every B index precedes every A index (a path on the weight lattice).
    pub fn is_lattice_path(&self) -> bool {
        let last_b = self.kinds.iter().rposition(|&k| k == IndexKind::B);
        let first_a = self.kinds.iter().position(|&k| k == IndexKind::A);
        match (last_b, first_a) {
            (Some(b), Some(a)) => b < a,
            _ => true,
        }
    }

    /// True for the su(p,|m|q) arrangement B…B F…F A…A.
    pub fn is_supmq(&self) -> bool {
        let mut sorted = self.kinds.clone();
        sorted.sort();
        sorted == self.kinds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_grading("su(2,2|4)").unwrap();
        assert_eq!(g.blocks(), vec![Block { size: 2, p: 0, c: 0 }, Block { size: 2, p: 0, c: 1 }, Block { size: 4, p: 1, c: 1 }]);
        let g = parse_grading("su(2,|4|2)").unwrap();
        assert_eq!(g.blocks(), vec![Block { size: 2, p: 0, c: 0 }, Block { size: 4, p: 1, c: 1 }, Block { size: 2, p: 0, c: 1 }]);
        assert_eq!(parse_grading("su(2)").unwrap().len(), 2);
        assert_eq!(parse_grading("su(2,\\!|4|2)").unwrap(), g);
        assert!(parse_grading("su(0|2)").is_err());
        assert!(parse_grading("su(2||2)").is_err());
        assert!(parse_grading("sl(2)").is_err());
        assert!(parse_grading("su(1)").is_err());
    }

    #[test]
    fn node_kind_examples() {
        use NodeKind::*;
        let g = parse_grading("su(1|1,|2,|1)").unwrap();
        assert_eq!(node_kinds(&g), vec![FermionicCEven, FermionicCOdd, CompactEven, FermionicCOdd]);
        let g = parse_grading("su(1,1,1,1)").unwrap();
        assert_eq!(node_kinds(&g), vec![NonCompact, NonCompact, NonCompact]);
    }

    #[test]
    fn canonical_examples() {
        let g = parse_grading("su(1|1,|2,|1)").unwrap();
        assert_eq!(render_grading(&canonical_form(&g).0), "su(2,1|2)");
        let g = parse_grading("su(1,1,1,1)").unwrap();
        assert_eq!(render_grading(&canonical_form(&g).0), "su(2,2)");
        let g = parse_grading("su(2,2|4)").unwrap();
        let (c, perm) = canonical_form(&g);
        assert_eq!(c, g);
        assert_eq!(perm, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn shape_detection() {
        let s = SuperShape::of(&parse_grading("su(2,|4|2)").unwrap()).unwrap();
        assert_eq!((s.p, s.q, s.m), (2, 2, 4));
        assert!(s.is_supmq());
        let s = SuperShape::of(&parse_grading("su(2,2|4)").unwrap()).unwrap();
        assert!(s.is_lattice_path() && !s.is_supmq());
        let s = SuperShape::of(&parse_grading("su(2|4)").unwrap()).unwrap();
        assert_eq!((s.p, s.q, s.m), (0, 2, 4));
    }
}
