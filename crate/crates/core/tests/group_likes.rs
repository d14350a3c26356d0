use std::time::{Duration, Instant};

use hopfcert::cosetcoalg::group_like_blocks;
use hopfcert::twist::{builtin, is_group_like_direct, TwistElt};
use hopfcert::SmallRational;

/// Full scan of S8: the group-likes are exactly the elements normalizing `M`
/// whose action fixes omega, each confirmed by expanding `Delta_J(g)`.
#[test]
fn s8_group_like_scan() {
    let s = builtin::load("s8-omega").unwrap();
    let j: TwistElt<SmallRational> = TwistElt::build(&s.m, &s.cocycle).unwrap();
    let start = Instant::now();
    let found = group_like_blocks(&s.group, &j);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "scan took {elapsed:?}");

    let expected: Vec<_> = s
        .group
        .elements()
        .iter()
        .copied()
        .filter(|g| s.m.is_normalized_by(g) && s.cocycle.is_invariant_under(&s.m, g).unwrap())
        .collect();
    assert_eq!(found, expected);
    assert!(found.len() >= s.m.order());
    for g in &found {
        assert!(is_group_like_direct(&j, g), "{g}");
    }
    // a non-normalizing element is not group-like
    let g = hopfcert::Perm::parse("(23)", 8).unwrap();
    assert!(!found.contains(&g) && !is_group_like_direct(&j, &g));
}
