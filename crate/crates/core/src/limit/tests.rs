use super::*;
use crate::io::parse_vector;
use crate::syt::YoungDiagram;

/// Partitions of `m` by the recurrence `p(m, max)`, independent of the engine.
fn p(m: u32) -> usize {
    fn rec(m: u32, max: u32) -> usize {
        if m == 0 {
            return 1;
        }
        (1..=m.min(max)).map(|a| rec(m - a, a)).sum()
    }
    rec(m, m)
}

/// `#{(α ∈ Z_{≥0}^k, μ) : k + |α| + |μ| = d}`.
fn flavored_count(k: usize, d: u32) -> usize {
    if d < k as u32 {
        return 0;
    }
    let rest = d - k as u32;
    // compositions of a into k nonnegative parts
    let comps = |a: u32| -> usize {
        if k == 0 {
            return usize::from(a == 0);
        }
        let (top, choose) = (a as usize + k - 1, k - 1);
        (0..choose).fold(1usize, |acc, i| acc * (top - i) / (i + 1))
    };
    (0..=rest).map(|a| comps(a) * p(rest - a)).sum()
}

fn pol() -> StableLimit {
    StableLimit::new(SeqSpec::Pol, LimitConfig::default()).unwrap()
}

fn mur(parts: &[usize]) -> StableLimit {
    StableLimit::new(SeqSpec::Murnaghan(YoungDiagram::new(parts.to_vec()).unwrap()), LimitConfig::default()).unwrap()
}

fn vecn(n: usize, text: &str) -> Vector<QtScalar> {
    parse_vector(text, n, None).unwrap()
}

#[test]
fn oracle_counts() {
    assert_eq!((0..=6).map(p).collect::<Vec<_>>(), vec![1, 1, 2, 3, 5, 7, 11]);
    assert_eq!(flavored_count(1, 2), 2);
    assert_eq!(flavored_count(2, 2), 1);
    assert_eq!(flavored_count(2, 3), 3);
}

#[test]
fn flavor_zero_matches_partitions() {
    let l = pol();
    for d in 0..=5 {
        let c = l.cell(0, d).unwrap();
        assert_eq!(c.dim, Some(p(d)), "d={d}");
        assert!(c.n_stabilized.unwrap() <= 8);
    }
}

#[test]
fn flavored_dimensions() {
    let l = pol();
    for k in 1..=2 {
        for d in 0..=4 {
            assert_eq!(l.cell(k, d).unwrap().dim, Some(flavored_count(k, d)), "k={k} d={d}");
        }
    }
}

#[test]
fn window_must_be_at_least_two() {
    assert!(StableLimit::new(SeqSpec::Pol, LimitConfig { window: 1, ..LimitConfig::default() }).is_err());
}

#[test]
fn low_cap_is_reported_not_guessed() {
    let l = StableLimit::new(SeqSpec::Pol, LimitConfig { ncap: 3, ..LimitConfig::default() }).unwrap();
    let c = l.cell(0, 5).unwrap();
    assert!(!c.resolved());
    assert_eq!(l.limit_component(0, 5).unwrap_err(), Error::NoStabilization { k: 0, d: 5, ncap: 3 });
    let t = l.dim_table(0, 5).unwrap();
    assert!(t.unresolved().contains(&(0, 5)));
}

#[test]
fn empty_shape_matches_polynomials() {
    let (a, b) = (pol(), mur(&[]));
    for k in 0..=2 {
        for d in 0..=(5 - k as u32) {
            assert_eq!(a.cell(k, d).unwrap().dim, b.cell(k, d).unwrap().dim, "k={k} d={d}");
        }
    }
}

#[test]
fn d_plus_on_the_constant_tower() {
    let l = pol();
    let (dim, towers) = l.limit_component(0, 0).unwrap();
    assert_eq!(dim, 1);
    let one = &towers[0];
    assert!(one.components.iter().enumerate().all(|(i, c)| *c == vecn(one.n_lo + i, "1")));
    let out = l.limit_act(&BOp::DPlus, one).unwrap();
    assert_eq!(out.k, 1);
    for (i, c) in out.components.iter().enumerate() {
        assert_eq!(*c, vecn(out.n_lo + i, "x_1"));
    }
    assert!(l.check_compatible(&out).unwrap());
}

#[test]
fn z_one_on_the_x1_tower() {
    let l = pol();
    let (_, towers) = l.limit_component(1, 1).unwrap();
    let t = &towers[0];
    assert_eq!(t.n_lo, 1);
    assert_eq!(t.components[0], vecn(1, "x_1"));
    let out = l.limit_act(&BOp::Z(1), t).unwrap();
    assert_eq!(out, l.move_window(t, out.n_lo).unwrap());
    assert_eq!(l.restrict(&out, 1).unwrap(), vecn(1, "x_1"));
}

#[test]
fn t_commutes_with_restriction() {
    let l = pol();
    let (_, towers) = l.limit_component(2, 3).unwrap();
    for t in &towers {
        let out = l.limit_act(&BOp::T(1), t).unwrap();
        let n = t.n_lo;
        let m = l.module(n).unwrap();
        let direct = apply_bop(&*m, &LVector::new(2, l.restrict(t, n).unwrap()), &BOp::T(1)).unwrap().v;
        assert_eq!(l.restrict(&out, n).unwrap(), direct);
    }
}

#[test]
fn window_moves_round_trip() {
    let l = pol();
    let (_, towers) = l.limit_component(1, 2).unwrap();
    for t in &towers {
        let up = l.move_window(t, t.n_lo + 2).unwrap();
        assert!(l.check_compatible(&up).unwrap());
        assert_eq!(l.move_window(&up, t.n_lo).unwrap(), *t);
    }
}

#[test]
fn table_rows_and_monotonicity() {
    let t = pol().dim_table(2, 4).unwrap();
    let rows = t.rows();
    assert_eq!(rows[0], vec![Some(1), Some(1), Some(2), Some(3), Some(5)]);
    assert!(rows[0].windows(2).all(|w| w[0] <= w[1]));
    let json = serde_json::to_value(&t).unwrap();
    assert!(json["cells"][0]["n_stabilized"].is_number());
}

#[test]
fn transitions_are_surjective_where_checked() {
    for l in [pol(), mur(&[1])] {
        for k in 0..=1 {
            for d in k as u32..=3 {
                let c = l.cell(k, d).unwrap();
                for pair in c.history.windows(2) {
                    assert_eq!(pair[0].transition_rank, Some(pair[0].dim), "{} k={k} d={d}", l.seq());
                }
            }
        }
    }
}

#[test]
fn d_plus_powers_are_injective() {
    let l = mur(&[1]);
    for k in 0..=2 {
        for d in 0..=2 {
            let (r, dim) = l.d_plus_power_rank(k, d).unwrap();
            assert_eq!(r, dim, "k={k} d={d}");
        }
    }
}

#[test]
fn tower_relations_small() {
    let r = pol().check_tower_relations(1, 2).unwrap();
    assert_eq!(r.len(), 15);
    for x in &r {
        assert!(x.passed(), "{}", x.summary());
    }
}
