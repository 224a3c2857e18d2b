//! Ramsey numbers: recurrence bounds, the small table, exhaustive search,
//! and the bounds they put on `dim` and `otp`.

use setsys::check::{fixture_pair, peak_order};
use setsys::ramsey::{
    check_union_bound, check_wqo_intersection_bound, ram_exact, ram_upper, ram_verify, RamseyQuery,
};

fn main() -> setsys::Result<()> {
    for sizes in [vec![3, 3], vec![3, 4], vec![4, 4], vec![3, 3, 3]] {
        let q = RamseyQuery::new(sizes.clone())?;
        let exact = ram_exact(&q).map(|e| format!("{} ({:?})", e.value, e.provenance));
        println!("Ram{sizes:?}: bound {}, table {}", ram_upper(&q)?, exact.unwrap_or("-".into()));
    }

    let five = ram_verify(3, 3, 5)?;
    if let Some(w) = &five.witness {
        println!("K5 without a monochromatic triangle: {:?}", w.edges);
    }
    println!("every coloring of K6 has one: {}", ram_verify(3, 3, 6)?.holds_at_n);

    let (l, m) = fixture_pair();
    let u = check_union_bound(&[&l, &m])?;
    println!("union: dim {} + 1 < {} (exact value: {})", u.union_dim, u.ramsey, u.exact);
    let w = check_wqo_intersection_bound(&peak_order(0), &peak_order(1))?;
    println!("orders: otp of meet {} < {}", w.otp_meet, w.ramsey);
    Ok(())
}
