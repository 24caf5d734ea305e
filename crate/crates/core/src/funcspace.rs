//! Desk-scale function-space orders: partial functions from inhabited
//! singleton domains `{x_i}` into a bounded integer interval, ordered
//! by domain inclusion plus pointwise `<`.
//!
//! With singleton domains, `dom f ⊆ dom g` forces equal domain points,
//! so `f < g` iff the domain points agree and `f`'s value is smaller.
//! Empty-domain functions are excluded: the empty function would be
//! strictly below itself vacuously, breaking asymmetry.
//!
//! The generated relation is asymmetric and transitive for every
//! config, but positive antisymmetry depends on the y-interval: the
//! output always goes back through the validator rather than being
//! assumed valid.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::fin::{product_index, product_unindex, ProductIndex};
use crate::order::{Carrier, OrderedType, StrictRelation};

/// One element of the function space: the unique domain point and its
/// value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartialFn {
    pub dom_point: usize,
    pub value: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuncSpaceConfig {
    pub x_size: usize,
    pub y_min: i64,
    pub y_max: i64,
}

impl FuncSpaceConfig {
    pub fn new(x_size: usize, y_min: i64, y_max: i64) -> Self {
        assert!(x_size >= 1, "x_size must be positive");
        assert!(y_min <= y_max, "empty y interval");
        FuncSpaceConfig { x_size, y_min, y_max }
    }

    pub fn y_width(&self) -> usize {
        (self.y_max - self.y_min + 1) as usize
    }

    pub fn carrier_size(&self) -> usize {
        self.x_size * self.y_width()
    }

    /// Carrier index of `f`, domain point major.
    pub fn index_of(&self, f: PartialFn) -> usize {
        let p = ProductIndex {
            first: f.dom_point,
            second: (f.value - self.y_min) as usize,
        };
        product_index(p, self.x_size, self.y_width()).expect("element outside config")
    }

    pub fn element(&self, k: usize) -> PartialFn {
        let p = product_unindex(k, self.x_size, self.y_width()).expect("index outside carrier");
        PartialFn {
            dom_point: p.first,
            value: self.y_min + p.second as i64,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = PartialFn> + '_ {
        (0..self.carrier_size()).map(|k| self.element(k))
    }

    pub fn label(&self, f: PartialFn) -> String {
        format!("f(x{})={}", f.dom_point, f.value)
    }
}

/// `f < g` iff the domain points agree and the values compare
/// strictly.
pub fn funcspace_lt(f: PartialFn, g: PartialFn) -> bool {
    f.dom_point == g.dom_point && f.value < g.value
}

/// The hypothesis of the pointwise bound: `dom f ⊆ dom g` and `f ≤ g`
/// on the intersection.
pub fn pointwise_leq(f: PartialFn, g: PartialFn) -> bool {
    f.dom_point == g.dom_point && f.value <= g.value
}

/// Enumerate the whole space and fill in the strict relation. The
/// result is deliberately unvalidated.
pub fn build_funcspace(cfg: FuncSpaceConfig) -> (Carrier, StrictRelation) {
    let n = cfg.carrier_size();
    let labels: Vec<String> = cfg.elements().map(|f| cfg.label(f)).collect();
    let carrier = Carrier::with_labels(labels).expect("funcspace labels are distinct");
    let mut rel = StrictRelation::new(n);
    for i in 0..n {
        for j in 0..n {
            if funcspace_lt(cfg.element(i), cfg.element(j)) {
                rel.insert(i, j);
            }
        }
    }
    (carrier, rel)
}

/// Pointwise `≤` on a shared domain forces the derived `≤`: checks the
/// implication for one pair in a validated funcspace order.
pub fn pointwise_leq_implies_leq(
    cfg: FuncSpaceConfig,
    o: &OrderedType,
    f: PartialFn,
    g: PartialFn,
) -> bool {
    let (i, j) = (cfg.index_of(f), cfg.index_of(g));
    assert!(i < o.size() && j < o.size(), "element outside the order");
    !pointwise_leq(f, g) || o.leq(i, j)
}
