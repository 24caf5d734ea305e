//! DOT export of the cover (Hasse) relation.

use gorder_core::OrderedType;

/// Cover pairs: i→j with i<j and nothing strictly between. For a
/// validated finite order the transitive closure of the covers
/// reproduces the full relation.
pub fn cover_pairs(o: &OrderedType) -> Vec<(usize, usize)> {
    let n = o.size();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if o.lt(i, j) && !(0..n).any(|k| o.lt(i, k) && o.lt(k, j)) {
                covers.push((i, j));
            }
        }
    }
    covers
}

pub fn to_dot(o: &OrderedType) -> String {
    let escape = |label: &str| label.replace('\\', "\\\\").replace('"', "\\\"");
    let mut out = String::from("digraph order {\n");
    for i in 0..o.size() {
        out.push_str(&format!("  \"{}\";\n", escape(o.label(i))));
    }
    for (i, j) in cover_pairs(o) {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            escape(o.label(i)),
            escape(o.label(j))
        ));
    }
    out.push_str("}\n");
    out
}
