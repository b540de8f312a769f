use super::*;
use crate::scalar::qt;

fn consts() -> Consts<QtScalar> {
    Consts::new(()).unwrap()
}

fn diagram(p: &[usize]) -> YoungDiagram {
    YoungDiagram::new(p.to_vec()).unwrap()
}

/// Independent count: try every arrangement of 1..n and keep the standard ones.
fn brute_force_count(shape: &[usize]) -> usize {
    fn perms(v: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for j in k..v.len() {
            v.swap(k, j);
            perms(v, k + 1, out);
            v.swap(k, j);
        }
    }
    let n: usize = shape.iter().sum();
    let mut all = Vec::new();
    perms(&mut (1..=n as u8).collect(), 0, &mut all);
    all.into_iter()
        .filter(|w| {
            let mut rows = Vec::new();
            let mut at = 0;
            for &len in shape {
                rows.push(w[at..at + len].to_vec());
                at += len;
            }
            StandardTableau::from_rows(rows).is_ok()
        })
        .count()
}

#[test]
fn padding() {
    assert_eq!(YoungDiagram::empty().pad(3).unwrap(), diagram(&[3]));
    assert_eq!(diagram(&[1]).pad(3).unwrap(), diagram(&[2, 1]));
    assert_eq!(diagram(&[2]).pad(3), Err(Error::RankTooSmall { n: 3, min: 4 }));
    assert!(YoungDiagram::parse("1,2").is_err());
    assert_eq!(YoungDiagram::parse("0").unwrap(), YoungDiagram::empty());
    assert_eq!(YoungDiagram::parse("").unwrap(), YoungDiagram::empty());
}

#[test]
fn tableau_counts_match_brute_force() {
    assert_eq!(enumerate_syt(&diagram(&[4])).len(), 1);
    for shape in [&[2, 1][..], &[2, 2], &[3, 2], &[3, 1, 1], &[2, 2, 1], &[3, 2, 1]] {
        let tabs = enumerate_syt(&diagram(shape));
        assert_eq!(tabs.len(), brute_force_count(shape), "shape {shape:?}");
        let mut sorted = tabs.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), tabs.len());
    }
}

#[test]
fn contents() {
    let row = StandardTableau::from_rows(vec![vec![1, 2, 3, 4]]).unwrap();
    for i in 1..=4 {
        assert_eq!(row.content(i).unwrap(), i as i32 - 1);
    }
    let t = StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
    assert_eq!(t.content(3).unwrap(), -1);
    assert!(t.content(4).is_err());
    for tau in enumerate_syt(&diagram(&[3, 2, 1])) {
        let mut cs: Vec<i32> = (1..=6).map(|i| tau.content(i).unwrap()).collect();
        cs.sort();
        assert_eq!(cs, vec![-2, -1, 0, 0, 1, 2]);
    }
}

#[test]
fn seminormal_action_examples() {
    let c = consts();
    let seed = Seed::new(&diagram(&[1]), 3, &c).unwrap();
    let t1 = StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
    let t2 = StandardTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
    let (i1, i2) = (seed.index_of(&t1).unwrap(), seed.index_of(&t2).unwrap());
    let img = seed.apply_t(&BTreeMap::from([(i1, qt("1"))]), 2);
    assert_eq!(img.get(&i2), Some(&qt("1")));
    assert_eq!(img.get(&i1), Some(&qt("(1-q)*q/(q-q^-1)")));
    // Same-row case.
    let img = seed.apply_t(&BTreeMap::from([(i1, qt("1"))]), 1);
    assert_eq!(img, BTreeMap::from([(i1, qt("1"))]));

    let square = Seed::new(&diagram(&[2]), 4, &c).unwrap();
    let tau = StandardTableau::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
    let j = square.index_of(&tau).unwrap();
    assert_eq!(square.apply_t(&BTreeMap::from([(j, qt("1"))]), 3), BTreeMap::from([(j, qt("1"))]));
    assert_eq!(square.apply_t(&BTreeMap::from([(j, qt("1"))]), 2).len(), 2);
    let col = StandardTableau::from_rows(vec![vec![1, 3], vec![2, 4]]).unwrap();
    let jc = square.index_of(&col).unwrap();
    assert_eq!(square.apply_t(&BTreeMap::from([(jc, qt("1"))]), 1), BTreeMap::from([(jc, qt("-q"))]));
}

#[test]
fn pi_is_inverse_word() {
    let c = consts();
    let seed = Seed::new(&YoungDiagram::empty(), 4, &c).unwrap();
    let e = BTreeMap::from([(0u32, qt("1"))]);
    assert_eq!(seed.apply_pi(&e), e);
    let one = Seed::new(&YoungDiagram::empty(), 1, &c).unwrap();
    assert_eq!(one.apply_pi(&e), e);
    let seed = Seed::new(&diagram(&[1]), 3, &c).unwrap();
    for tau in 0..seed.dim() as u32 {
        let v = BTreeMap::from([(tau, qt("1"))]);
        let expect = seed.apply_t_inv(&seed.apply_t_inv(&v, 2), 1);
        assert_eq!(seed.apply_pi(&v), expect);
    }
}

#[test]
fn hecke_relations_on_seeds() {
    let c = consts();
    for (lam, n) in [(&[][..], 4), (&[1][..], 4), (&[2][..], 5), (&[1, 1][..], 5), (&[2, 1][..], 6)] {
        let seed = Seed::new(&diagram(lam), n, &c).unwrap();
        for tau in 0..seed.dim() as u32 {
            let v = BTreeMap::from([(tau, qt("1"))]);
            for i in 1..n {
                let tv = seed.apply_t(&v, i);
                let ttv = seed.apply_t(&tv, i);
                // (T - 1)(T + q) = T^2 + (q-1)T - q
                let mut res = ttv.clone();
                for (k, x) in &tv {
                    let e = res.entry(*k).or_insert_with(QtScalar::zero);
                    *e = e.add(&x.mul(&qt("q-1")));
                }
                let e = res.entry(tau).or_insert_with(QtScalar::zero);
                *e = e.sub(&qt("q"));
                res.retain(|_, x| !x.is_zero());
                assert!(res.is_empty(), "quadratic fails for {lam:?} n={n} τ={tau} i={i}");
                if i + 1 < n {
                    let l = seed.apply_t(&seed.apply_t(&seed.apply_t(&v, i), i + 1), i);
                    let r = seed.apply_t(&seed.apply_t(&seed.apply_t(&v, i + 1), i), i + 1);
                    assert_eq!(l, r);
                }
                assert_eq!(seed.apply_t_inv(&tv, i), v);
            }
        }
    }
}

#[test]
fn kappa_keeps_corner_tableaux() {
    let c = consts();
    let lam = diagram(&[1]);
    let upper = Seed::new(&lam, 4, &c).unwrap();
    let lower = Seed::new(&lam, 3, &c).unwrap();
    let table = upper.kappa_table(&lower).unwrap();
    for (j, img) in table.iter().enumerate() {
        let t = &upper.tableaux[j];
        if t.rows()[0] == [1, 2, 3] {
            assert!(img.is_none());
        } else {
            assert_eq!(t.position(4), Some((0, 2)));
            assert!(img.is_some());
        }
    }
    assert_eq!(table.iter().filter(|x| x.is_some()).count(), 2);
    assert!(kappa_connect(&upper, &lower, &BTreeMap::new()).unwrap().is_empty());
    let wrong = Seed::new(&lam, 2, &c).unwrap();
    assert!(upper.kappa_table(&wrong).is_err());
}

#[test]
fn theta_examples() {
    let row = StandardTableau::from_rows(vec![vec![1, 2, 3]]).unwrap();
    for i in 1..=3 {
        assert_eq!(theta_eigencheck(&row, i).unwrap(), QtScalar::q_pow(i as i32 - 1));
    }
    let t1 = StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
    assert_eq!(theta_eigencheck(&t1, 3).unwrap(), qt("1/q"));
    assert_eq!(theta_eigencheck(&t1, 1).unwrap(), qt("1"));
}
