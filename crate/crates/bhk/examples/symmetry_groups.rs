//! Diagonal symmetry groups of the Fermat quintic: Aut_diag, SL, J, the
//! Krawitz dual, and the enumeration of admissible groups between J and SL.

use bhk::invertible::InvertiblePolynomial;
use bhk::symmetry::{
    admissible_groups, aut_diag, dual_group, group_quotient_structure, j_group, sl_group,
};

fn main() {
    let p = InvertiblePolynomial::parse("x0^5+x1^5+x2^5+x3^5+x4^5").unwrap();
    let a = p.matrix();
    let aut = aut_diag(a).unwrap();
    let sl = sl_group(a).unwrap();
    let j = j_group(a).unwrap();
    println!("|Aut_diag| = {}", aut.order());
    println!("|SL|       = {}", sl.order());
    println!("|J|        = {}", j.order());
    for g in j.generators() {
        println!("J generator: {g}");
    }

    let dual_j = dual_group(a, &j).unwrap();
    println!("J^T = SL: {}", dual_j == sl);
    let dual_sl = dual_group(a, &sl).unwrap();
    println!("SL^T = J: {}", dual_sl == j);

    let q = group_quotient_structure(&sl, &j).unwrap();
    println!("SL/J = {}", q.describe());

    // every group between J and SL of the quintic, through the finite
    // quotient (an elementary abelian 5-group of rank 3)
    let groups = admissible_groups(a, a, 1_000_000).unwrap();
    println!("admissible groups J ⊆ G ⊆ SL: {}", groups.len());
    let mut by_order = std::collections::BTreeMap::new();
    for g in &groups {
        *by_order.entry(g.order().clone()).or_insert(0usize) += 1;
    }
    for (order, count) in by_order {
        println!("  order {order}: {count} group(s)");
    }

    // duality is an involution across the transpose
    let all_involutive = groups
        .iter()
        .all(|g| dual_group(a, &dual_group(a, g).unwrap()).unwrap() == *g);
    println!("(G^T)^T = G for all of them: {all_involutive}");
}
