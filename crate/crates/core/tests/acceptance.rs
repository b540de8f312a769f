//! End-to-end acceptance run: one line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use bqt_core::bqt::BOp;
use bqt_core::daha::TVariant;
use bqt_core::family::{ModuleSpec, SeqSpec};
use bqt_core::limit::{LimitConfig, StableLimit};
use bqt_core::syt::YoungDiagram;
use bqt_core::verify::{
    all_pass, check_aux_identities, check_bqt_relations, check_compatibility, check_compatibility_with,
    check_daha_relations, check_theta_spectra, CheckConfig, RelationReport, Status,
};

type Outcome = Result<String, String>;

fn shape(parts: &[usize]) -> YoungDiagram {
    YoungDiagram::new(parts.to_vec()).expect("valid partition")
}

/// Partition numbers by Euler's pentagonal recurrence.
fn partition_numbers(upto: usize) -> Vec<usize> {
    let mut p = vec![0i64; upto + 1];
    p[0] = 1;
    for m in 1..=upto {
        let mut acc = 0i64;
        for j in 1i64.. {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    p.into_iter().map(|v| v as usize).collect()
}

/// Pairs `(α ∈ Z_{≥0}^k, μ)` with `k + |α| + |μ| = d`, by listing every `α`.
fn pairs(k: usize, d: usize) -> usize {
    if d < k {
        return 0;
    }
    let p = partition_numbers(d);
    fn walk(k: usize, left: usize, p: &[usize]) -> usize {
        if k == 0 {
            return p[left];
        }
        (0..=left).map(|a| walk(k - 1, left - a, p)).sum()
    }
    walk(k, d - k, &p)
}

fn suite(reports: &[RelationReport], tally: &mut (usize, usize)) -> Result<(), String> {
    for r in reports {
        tally.0 += 1;
        tally.1 += r.vectors_checked;
        if r.status == Status::Fail {
            return Err(r.summary());
        }
    }
    Ok(())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn daha_suite() -> Outcome {
    let mut t = (0, 0);
    for n in 2..=4 {
        suite(&check_daha_relations(&ModuleSpec::poly(n), &CheckConfig::exact(4)).map_err(err)?, &mut t)?;
    }
    for l in [shape(&[]), shape(&[1]), shape(&[2]), shape(&[1, 1])] {
        for n in l.threshold().max(1)..=5 {
            let m = ModuleSpec::murnaghan(l.clone(), n);
            suite(&check_daha_relations(&m, &CheckConfig::exact(2)).map_err(err)?, &mut t)?;
        }
    }
    Ok(format!("{} relation runs, {} vector checks, all residuals zero", t.0, t.1))
}

fn bqt_suite() -> Outcome {
    let mut t = (0, 0);
    for n in 1..=4 {
        let cfg = CheckConfig::exact(4).k_max(n);
        suite(&check_bqt_relations(&ModuleSpec::poly(n), &cfg).map_err(err)?, &mut t)?;
    }
    let m = ModuleSpec::murnaghan(shape(&[1]), 4);
    suite(&check_bqt_relations(&m, &CheckConfig::exact(3).k_max(3)).map_err(err)?, &mut t)?;
    Ok(format!("{} relation runs, {} spanning-vector checks", t.0, t.1))
}

fn aux_suite() -> Outcome {
    let mut t = (0, 0);
    for n in 1..=4 {
        suite(&check_aux_identities(&ModuleSpec::poly(n), &CheckConfig::exact(3)).map_err(err)?, &mut t)?;
    }
    for n in 2..=4 {
        let m = ModuleSpec::murnaghan(shape(&[1]), n);
        suite(&check_aux_identities(&m, &CheckConfig::exact(2)).map_err(err)?, &mut t)?;
    }
    Ok(format!("{} identity runs, {} vector checks", t.0, t.1))
}

fn theta_suite() -> Outcome {
    let r = check_theta_spectra(3, 6).map_err(err)?;
    match r.status {
        Status::Pass => Ok(format!("{} eigenchecks over {} seeds", r.vectors_checked, r.instances)),
        _ => Err(r.summary()),
    }
}

fn compat_suite() -> Outcome {
    let mut t = (0, 0);
    let seqs = [SeqSpec::Pol, SeqSpec::Murnaghan(shape(&[])), SeqSpec::Murnaghan(shape(&[1])), SeqSpec::Murnaghan(shape(&[2]))];
    for seq in &seqs {
        let n0 = seq.n_start();
        for n in n0..=n0 + 2 {
            suite(&check_compatibility(seq, n, &CheckConfig::exact(3)).map_err(err)?, &mut t)?;
        }
    }
    Ok(format!("{} axiom runs, {} vector checks", t.0, t.1))
}

fn dims_suite() -> Outcome {
    let l = StableLimit::new(SeqSpec::Pol, LimitConfig::default()).map_err(err)?;
    let p = partition_numbers(6);
    let mut worst = 0;
    for d in 0..=6u32 {
        let c = l.cell(0, d).map_err(err)?;
        let n_s = c.n_stabilized.ok_or(format!("k=0 d={d} did not stabilize by n=8"))?;
        worst = worst.max(n_s + 1);
        if c.dim != Some(p[d as usize]) {
            return Err(format!("k=0 d={d}: {:?} vs p(d) = {}", c.dim, p[d as usize]));
        }
    }
    for k in 1..=2 {
        for d in 0..=5u32 {
            let c = l.cell(k, d).map_err(err)?;
            let n_s = c.n_stabilized.ok_or(format!("k={k} d={d} did not stabilize by n=8"))?;
            worst = worst.max(n_s + 1);
            if c.dim != Some(pairs(k, d as usize)) {
                return Err(format!("k={k} d={d}: {:?} vs {}", c.dim, pairs(k, d as usize)));
            }
        }
    }
    Ok(format!("p(d) = {:?}; flavored counts match; largest window rank {worst}", p))
}

fn murnaghan_suite() -> Outcome {
    let pol = StableLimit::new(SeqSpec::Pol, LimitConfig::default()).map_err(err)?;
    let empty = StableLimit::new(SeqSpec::Murnaghan(shape(&[])), LimitConfig::default()).map_err(err)?;
    let mut compared = 0;
    for k in 0..=5usize {
        for d in 0..=(5 - k) as u32 {
            let (a, b) = (pol.cell(k, d).map_err(err)?, empty.cell(k, d).map_err(err)?);
            if a.dim != b.dim {
                return Err(format!("dimension mismatch at k={k} d={d}: {:?} vs {:?}", a.dim, b.dim));
            }
            if k + d as usize > 4 || d < k as u32 {
                continue;
            }
            let n_lo = a.n_stabilized.max(b.n_stabilized).unwrap_or(1).max(k + 1);
            let (ta, tb) = (pol.towers_at(k, d, n_lo).map_err(err)?, empty.towers_at(k, d, n_lo).map_err(err)?);
            if ta != tb {
                return Err(format!("basis towers differ at k={k} d={d}"));
            }
            let mut ops = vec![BOp::DPlus];
            if k >= 1 {
                ops.extend([BOp::DMinus, BOp::Z(1), BOp::Z(k)]);
            }
            if k >= 2 {
                ops.push(BOp::T(1));
            }
            for t in &ta {
                for op in &ops {
                    let (x, y) = (pol.limit_act(op, t).map_err(err)?, empty.limit_act(op, t).map_err(err)?);
                    compared += 1;
                    if x != y {
                        return Err(format!("{op} differs at k={k} d={d}"));
                    }
                }
            }
        }
    }
    let (mut cells, mut zeros, mut empty_rows) = (0, Vec::new(), Vec::new());
    for parts in [&[1usize][..], &[2]] {
        let l = StableLimit::new(SeqSpec::Murnaghan(shape(parts)), LimitConfig::default()).map_err(err)?;
        for k in 0..=2 {
            let mut row_nonzero = false;
            for d in 0..=3u32 {
                let c = l.cell(k, d).map_err(err)?;
                cells += 1;
                row_nonzero |= c.dim.unwrap_or(0) > 0;
                if c.dim.unwrap_or(0) == 0 {
                    zeros.push(format!("{parts:?}:(k={k},d={d})"));
                }
                let (r, dim) = l.d_plus_power_rank(k, d).map_err(err)?;
                if r != dim {
                    return Err(format!("d_+^{k} has rank {r} < {dim} on flavor 0, degree {d}"));
                }
            }
            if !row_nonzero {
                empty_rows.push(format!("{parts:?}:k={k}"));
            }
        }
    }
    let rows = if empty_rows.is_empty() { "every row k <= 2 has a nonzero cell".to_string() } else { format!("rows with no nonzero cell: {}", empty_rows.join(" ")) };
    let rest = format!("empty shape agrees ({compared} operator images); d_+^k injective for k <= 2, d <= 3; {rows}");
    if zeros.is_empty() {
        Ok(format!("{rest}; all {cells} cells nonzero"))
    } else {
        Err(format!("{} of {cells} cells are zero: {}; {rest}", zeros.len(), zeros.join(" ")))
    }
}

fn tower_suite() -> Outcome {
    let mut t = (0, 0);
    for seq in [SeqSpec::Pol, SeqSpec::Murnaghan(shape(&[1]))] {
        let l = StableLimit::new(seq, LimitConfig::default()).map_err(err)?;
        suite(&l.check_tower_relations(2, 3).map_err(err)?, &mut t)?;
    }
    Ok(format!("{} relation runs on {} basis towers", t.0, t.1))
}

fn negative_controls() -> Outcome {
    let flip = ModuleSpec::Poly { n: 2, variant: TVariant::SignFlipped };
    let r = check_daha_relations(&flip, &CheckConfig::exact(2)).map_err(err)?;
    let quad = r.iter().find(|x| x.relation_id == "daha.1").expect("quadratic relation");
    let c1 = quad.counterexample.clone().ok_or("sign flip went undetected")?;
    if all_pass(&r) {
        return Err("sign flip passed".into());
    }
    let r = check_compatibility_with(&SeqSpec::Pol, 2, &CheckConfig::exact(2), true).map_err(err)?;
    let four = r.iter().find(|x| x.relation_id == "compat.4").expect("axiom four");
    let c2 = four.counterexample.clone().ok_or("broken connector went undetected")?;
    Ok(format!(
        "quadratic fails at {} (residual {}); Pi X_3 = 0 fails at {} (image {})",
        c1.vector, c1.residual, c2.vector, c2.residual
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("DAHA relations on polynomial and induced modules", daha_suite),
        ("B_qt relations on L(V) for polynomial and induced modules", bqt_suite),
        ("auxiliary identities", aux_suite),
        ("seed spectra of theta_i", theta_suite),
        ("compatible-sequence axioms", compat_suite),
        ("stable-limit dimensions for C_pol", dims_suite),
        ("Murnaghan consistency and nonzeroness", murnaghan_suite),
        ("B_qt relations on towers", tower_suite),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
