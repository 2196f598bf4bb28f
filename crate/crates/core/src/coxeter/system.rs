use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use super::{CoxeterError, CoxeterMatrix, ReflectionRep};
use crate::exactalg::linalg::Matrix;

static NEXT_SYSTEM_ID: AtomicU32 = AtomicU32::new(1);

/// Handle to an interned group element. Only meaningful together with the
/// [`CoxeterSystem`] that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    sys: u32,
    idx: u32,
}

impl Element {
    pub fn system_id(&self) -> u32 {
        self.sys
    }

    pub fn is_identity(&self) -> bool {
        self.idx == 0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}#{})", self.sys, self.idx)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

struct Entry {
    key: Matrix,
    inv_key: Matrix,
    length: usize,
    word: Vec<usize>,
    left_desc: Vec<bool>,
    right_desc: Vec<bool>,
    left: Vec<Option<u32>>,
    right: Vec<Option<u32>>,
}

#[derive(Default)]
struct Table {
    entries: Vec<Entry>,
    index: HashMap<Matrix, u32>,
}

pub struct CoxeterSystem {
    id: u32,
    matrix: CoxeterMatrix,
    geometric: ReflectionRep,
    minimal: OnceLock<ReflectionRep>,
    table: RwLock<Table>,
    bruhat: RwLock<HashMap<(u32, u32), bool>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("id", &self.id)
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Result<Arc<Self>, CoxeterError> {
        let geometric = ReflectionRep::geometric(&matrix)?;
        let sys = Arc::new(Self {
            id: NEXT_SYSTEM_ID.fetch_add(1, AtomicOrdering::Relaxed),
            matrix,
            geometric,
            minimal: OnceLock::new(),
            table: RwLock::new(Table::default()),
            bruhat: RwLock::new(HashMap::new()),
        });
        let id = Matrix::identity(sys.geometric.field(), sys.geometric.dim());
        let e = sys.intern(id.clone(), id, 0);
        debug_assert_eq!(e, 0);
        Ok(sys)
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn generator_name(&self, s: usize) -> &str {
        &self.matrix.generators()[s]
    }

    pub fn geometric_rep(&self) -> &ReflectionRep {
        &self.geometric
    }

    pub fn minimal_rep(&self) -> &ReflectionRep {
        self.minimal.get_or_init(|| {
            ReflectionRep::minimal(&self.matrix).expect("field already validated by geometric rep")
        })
    }

    pub fn identity(&self) -> Element {
        Element { sys: self.id, idx: 0 }
    }

    pub fn generator(&self, s: usize) -> Result<Element, CoxeterError> {
        if s >= self.rank() {
            return Err(CoxeterError::GeneratorOutOfRange(s));
        }
        Ok(self.lmul(s, self.identity()))
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank()).map(|s| self.lmul(s, self.identity())).collect()
    }

    pub fn check(&self, x: Element) -> Result<(), CoxeterError> {
        if x.sys == self.id {
            Ok(())
        } else {
            Err(CoxeterError::MixedSystems)
        }
    }

    fn own(&self, x: Element) {
        assert_eq!(x.sys, self.id, "element from a different Coxeter system");
    }

    fn el(&self, idx: u32) -> Element {
        Element { sys: self.id, idx }
    }

    /// Number of elements interned so far.
    pub fn interned(&self) -> usize {
        self.table.read().entries.len()
    }

    pub fn length(&self, x: Element) -> usize {
        self.own(x);
        self.table.read().entries[x.idx as usize].length
    }

    /// The ShortLex-minimal reduced word.
    pub fn word(&self, x: Element) -> Vec<usize> {
        self.own(x);
        self.table.read().entries[x.idx as usize].word.clone()
    }

    /// Matrix of `x` in the geometric representation.
    pub fn key(&self, x: Element) -> Matrix {
        self.own(x);
        self.table.read().entries[x.idx as usize].key.clone()
    }

    pub fn word_string(&self, x: Element) -> String {
        self.format_word(&self.word(x))
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&s| self.generator_name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a whitespace separated word of generator names; the empty
    /// string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, CoxeterError> {
        text.split_whitespace()
            .map(|g| {
                self.matrix
                    .generator_index(g)
                    .ok_or_else(|| CoxeterError::UnknownGenerator(g.to_string()))
            })
            .collect()
    }

    pub fn parse_element(&self, text: &str) -> Result<Element, CoxeterError> {
        Ok(self.element_from_word(&self.parse_word(text)?))
    }

    /// Product of the generators along `word` (not necessarily reduced).
    pub fn element_from_word(&self, word: &[usize]) -> Element {
        word.iter()
            .fold(self.identity(), |acc, &s| self.rmul(acc, s))
    }

    pub fn descends(&self, x: Element, s: usize, side: Side) -> bool {
        self.own(x);
        let t = self.table.read();
        let e = &t.entries[x.idx as usize];
        match side {
            Side::Left => e.left_desc[s],
            Side::Right => e.right_desc[s],
        }
    }

    pub fn left_descents(&self, x: Element) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.descends(x, s, Side::Left)).collect()
    }

    pub fn right_descents(&self, x: Element) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.descends(x, s, Side::Right)).collect()
    }

    pub fn first_left_descent(&self, x: Element) -> Option<usize> {
        (0..self.rank()).find(|&s| self.descends(x, s, Side::Left))
    }

    pub fn mul_gen(&self, x: Element, s: usize, side: Side) -> Result<Element, CoxeterError> {
        self.check(x)?;
        if s >= self.rank() {
            return Err(CoxeterError::GeneratorOutOfRange(s));
        }
        Ok(self.step(x, s, side))
    }

    /// `s * x`.
    pub fn lmul(&self, s: usize, x: Element) -> Element {
        self.own(x);
        self.step(x, s, Side::Left)
    }

    /// `x * s`.
    pub fn rmul(&self, x: Element, s: usize) -> Element {
        self.own(x);
        self.step(x, s, Side::Right)
    }

    pub fn multiply(&self, x: Element, y: Element) -> Result<Element, CoxeterError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.word(y).into_iter().fold(x, |acc, s| self.rmul(acc, s)))
    }

    pub fn inverse(&self, x: Element) -> Result<Element, CoxeterError> {
        self.check(x)?;
        let mut w = self.word(x);
        w.reverse();
        Ok(self.element_from_word(&w))
    }

    /// Order by length, then lexicographically by the stored reduced word.
    pub fn shortlex_cmp(&self, x: Element, y: Element) -> Ordering {
        let t = self.table.read();
        let a = &t.entries[x.idx as usize];
        let b = &t.entries[y.idx as usize];
        a.length.cmp(&b.length).then_with(|| a.word.cmp(&b.word))
    }

    pub fn sort_shortlex(&self, xs: &mut [Element]) {
        xs.sort_by(|&a, &b| self.shortlex_cmp(a, b));
    }

    fn step(&self, x: Element, s: usize, side: Side) -> Element {
        let (key, inv_key, length) = {
            let t = self.table.read();
            let e = &t.entries[x.idx as usize];
            let cached = match side {
                Side::Left => e.left[s],
                Side::Right => e.right[s],
            };
            if let Some(i) = cached {
                return self.el(i);
            }
            let g = self.geometric.generator_matrix(s);
            let (desc, key, inv_key) = match side {
                Side::Left => (e.left_desc[s], g * &e.key, &e.inv_key * g),
                Side::Right => (e.right_desc[s], &e.key * g, g * &e.inv_key),
            };
            let length = if desc { e.length - 1 } else { e.length + 1 };
            (key, inv_key, length)
        };
        let y = self.intern(key, inv_key, length);
        let mut t = self.table.write();
        match side {
            Side::Left => {
                t.entries[x.idx as usize].left[s] = Some(y);
                t.entries[y as usize].left[s] = Some(x.idx);
            }
            Side::Right => {
                t.entries[x.idx as usize].right[s] = Some(y);
                t.entries[y as usize].right[s] = Some(x.idx);
            }
        }
        self.el(y)
    }

    fn intern(&self, key: Matrix, inv_key: Matrix, length: usize) -> u32 {
        if let Some(&i) = self.table.read().index.get(&key) {
            return i;
        }
        let n = self.rank();
        let negative_column = |m: &Matrix, s: usize| {
            let col = m.column(s);
            col.iter()
                .find(|c| !c.is_zero())
                .map(|c| c.signum() < 0)
                .unwrap_or(false)
        };
        let right_desc: Vec<bool> = (0..n).map(|s| negative_column(&key, s)).collect();
        let left_desc: Vec<bool> = (0..n).map(|s| negative_column(&inv_key, s)).collect();
        let mut left = vec![None; n];
        let first = left_desc.iter().position(|&d| d);
        let word = match first {
            None => Vec::new(),
            Some(t) => {
                let g = self.geometric.generator_matrix(t);
                let shorter = self.intern(g * &key, &inv_key * g, length - 1);
                left[t] = Some(shorter);
                let mut w = vec![t];
                w.extend_from_slice(&self.table.read().entries[shorter as usize].word);
                w
            }
        };
        debug_assert_eq!(word.len(), length);
        let mut t = self.table.write();
        if let Some(&i) = t.index.get(&key) {
            return i;
        }
        let idx = t.entries.len() as u32;
        if let Some(s) = first {
            let shorter = left[s].expect("set above") as usize;
            t.entries[shorter].left[s] = Some(idx);
        }
        t.index.insert(key.clone(), idx);
        t.entries.push(Entry {
            key,
            inv_key,
            length,
            word,
            left_desc,
            right_desc,
            left,
            right: vec![None; n],
        });
        idx
    }

    /// Bruhat order `y <= x`.
    pub fn bruhat_leq(&self, y: Element, x: Element) -> Result<bool, CoxeterError> {
        self.check(y)?;
        self.check(x)?;
        Ok(self.leq(y, x))
    }

    pub(crate) fn leq(&self, y: Element, x: Element) -> bool {
        let (ly, lx) = (self.length(y), self.length(x));
        if ly >= lx {
            return y == x;
        }
        if ly == 0 {
            return true;
        }
        if let Some(&r) = self.bruhat.read().get(&(y.idx, x.idx)) {
            return r;
        }
        let s = self.first_left_descent(x).expect("nonidentity has a descent");
        let sx = self.lmul(s, x);
        let r = if self.descends(y, s, Side::Left) {
            self.leq(self.lmul(s, y), sx)
        } else {
            self.leq(y, sx)
        };
        self.bruhat.write().insert((y.idx, x.idx), r);
        r
    }

    /// All elements of length at most `max_len`, in ShortLex order.
    pub fn elements_up_to_length(&self, max_len: usize) -> Vec<Element> {
        let mut all = vec![self.identity()];
        let mut level = vec![self.identity()];
        for _ in 0..max_len {
            let mut next = BTreeSet::new();
            for &x in &level {
                for s in 0..self.rank() {
                    if !self.descends(x, s, Side::Right) {
                        next.insert(self.rmul(x, s));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            level = next.into_iter().collect();
            all.extend_from_slice(&level);
        }
        self.sort_shortlex(&mut all);
        all
    }

    /// The Bruhat interval `{y : y <= x}` in ShortLex order.
    pub fn lower_interval(&self, x: Element) -> Vec<Element> {
        self.own(x);
        let mut set = BTreeSet::from([self.identity()]);
        for &s in self.word(x).iter().rev() {
            let shifted: Vec<Element> = set.iter().map(|&y| self.lmul(s, y)).collect();
            set.extend(shifted);
        }
        let mut out: Vec<Element> = set.into_iter().collect();
        self.sort_shortlex(&mut out);
        out
    }

    /// `x` is a reflection iff `x^2 = e`, `x != e` and the fixed space of `x`
    /// in the minimal representation has codimension one.
    pub fn is_reflection(&self, x: Element) -> bool {
        self.own(x);
        if x.is_identity() {
            return false;
        }
        {
            let t = self.table.read();
            let e = &t.entries[x.idx as usize];
            if e.key != e.inv_key {
                return false;
            }
        }
        let m = self.minimal_rep().matrix_of_word(&self.word(x));
        m.sub_identity().rank() == 1
    }

    pub fn reflections_up_to_length(&self, max_len: usize) -> Vec<Element> {
        self.elements_up_to_length(max_len)
            .into_iter()
            .filter(|&x| self.is_reflection(x))
            .collect()
    }

    /// Reflections `w s w^-1` of length at most `max_len`, by brute force
    /// conjugation of the generators.
    pub fn reflections_by_conjugation(&self, max_len: usize) -> Vec<Element> {
        if max_len == 0 {
            return Vec::new();
        }
        let mut set = BTreeSet::new();
        for w in self.elements_up_to_length((max_len - 1) / 2) {
            let winv = self.inverse(w).expect("same system");
            for s in 0..self.rank() {
                let c = self.multiply(self.rmul(w, s), winv).expect("same system");
                if self.length(c) <= max_len {
                    set.insert(c);
                }
            }
        }
        let mut out: Vec<Element> = set.into_iter().collect();
        self.sort_shortlex(&mut out);
        out
    }

    /// Reflections `t` with `y t < y`.
    pub fn right_inversion_set(&self, y: Element) -> Vec<Element> {
        let ly = self.length(y);
        self.reflections_up_to_length(2 * ly.max(1) - 1)
            .into_iter()
            .filter(|&t| self.length(self.multiply(y, t).expect("same system")) < ly)
            .collect()
    }
}
