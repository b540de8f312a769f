//! Dense univariate and bivariate integer polynomials used by the gcd kernel.
//!
//! `UPoly` is a coefficient vector in ascending degree order with no trailing
//! zeros. `BPoly` is a polynomial in an outer variable whose coefficients are
//! `UPoly`s in an inner variable (also trimmed). Everything here is internal
//! to the scalar module; the public face is [`super::IntPoly2`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type BPoly = Vec<UPoly>;

const HEU_GCD_MAX: usize = 6;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn btrim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn max_norm(p: &UPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn bmax_norm(p: &BPoly) -> BigInt {
    p.iter().map(max_norm).max().unwrap_or_else(BigInt::zero)
}

pub(crate) fn content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn bcontent_int(p: &BPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.iter().flatten() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn scale_div(p: &UPoly, d: &BigInt) -> UPoly {
    p.iter().map(|c| c / d).collect()
}

fn scale_mul(p: &UPoly, m: &BigInt) -> UPoly {
    if m.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c * m).collect()
}

pub(crate) fn sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact quotient `a / b` in `Z[x]`, or `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lb = b.last().unwrap();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &qc * bc;
        }
        quo[k] = qc;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quo);
    Some(quo)
}

fn eval(p: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Symmetric residue of `c` modulo `m`, in `(-m/2, m/2]`.
fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let mut r = c.mod_floor(m);
    if &r * 2 > *m {
        r -= m;
    }
    r
}

/// Recover a polynomial from its value at `x` by balanced base-`x` digits.
fn interpolate_int(mut h: BigInt, x: &BigInt) -> UPoly {
    let mut out = Vec::new();
    while !h.is_zero() {
        let g = sym_mod(&h, x);
        h = (h - &g) / x;
        out.push(g);
    }
    trim(&mut out);
    if out.last().is_some_and(|c| c.is_negative()) {
        for c in out.iter_mut() {
            *c = -&*c;
        }
    }
    out
}

fn primitive(p: &UPoly) -> UPoly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    scale_div(p, &c)
}

/// First evaluation point. Staying at or above `2 min(|f|, |g|) + 2` is what
/// makes a verified candidate provably the greatest common divisor.
fn heu_start(fn_: &BigInt, gn: &BigInt, flc: &BigInt, glc: &BigInt) -> BigInt {
    let safe: BigInt = 2 * fn_.min(gn) + 2;
    let roots: BigInt = 2 * (fn_ / flc.abs()).min(gn / glc.abs()) + 4;
    safe.max(roots)
}

fn heu_next(x: &BigInt) -> BigInt {
    x * 73794 * x.sqrt().sqrt() / 27011
}

/// Heuristic gcd in `Z[x]`; `None` if every evaluation point was unlucky.
fn heu_gcd(f: &UPoly, g: &UPoly) -> Option<UPoly> {
    let cf = content(f);
    let cg = content(g);
    let c = cf.gcd(&cg);
    let f = scale_div(f, &cf);
    let g = scale_div(g, &cg);
    if f.len() == 1 || g.len() == 1 {
        return Some(vec![c]);
    }
    let fnorm = max_norm(&f);
    let gnorm = max_norm(&g);
    let mut x = heu_start(&fnorm, &gnorm, f.last().unwrap(), g.last().unwrap());
    for _ in 0..HEU_GCD_MAX {
        let ff = eval(&f, &x);
        let gg = eval(&g, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let cands = [h.clone(), &ff / &h, &gg / &h];
            for (idx, cand) in cands.iter().enumerate() {
                let p = primitive(&interpolate_int(cand.clone(), &x));
                if p.is_empty() {
                    continue;
                }
                let hh = match idx {
                    0 => p,
                    1 => match div_exact(&f, &p) {
                        Some(h) => h,
                        None => continue,
                    },
                    _ => match div_exact(&g, &p) {
                        Some(h) => h,
                        None => continue,
                    },
                };
                if div_exact(&f, &hh).is_some() && div_exact(&g, &hh).is_some() {
                    return Some(scale_mul(&primitive(&hh), &c));
                }
            }
        }
        x = heu_next(&x);
    }
    None
}

fn pseudo_rem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r = scale_mul(&r, &lb);
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

fn prs_gcd(f: &UPoly, g: &UPoly) -> UPoly {
    let c = content(f).gcd(&content(g));
    let mut a = primitive(f);
    let mut b = primitive(g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    let mut a = primitive(&a);
    if a.last().is_some_and(|l| l.is_negative()) {
        a = a.iter().map(|x| -x).collect();
    }
    scale_mul(&a, &c)
}

/// gcd in `Z[x]` with positive leading coefficient.
pub(crate) fn gcd(f: &UPoly, g: &UPoly) -> UPoly {
    if f.is_empty() {
        return normalize_sign(g.clone());
    }
    if g.is_empty() {
        return normalize_sign(f.clone());
    }
    if f.len() == 1 || g.len() == 1 {
        return vec![content(f).gcd(&content(g))];
    }
    let h = heu_gcd(f, g).unwrap_or_else(|| prs_gcd(f, g));
    normalize_sign(h)
}

fn normalize_sign(mut p: UPoly) -> UPoly {
    trim(&mut p);
    if p.last().is_some_and(|l| l.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

// ---------------------------------------------------------------------------
// Bivariate: outer variable indexes the vector, inner variable is the UPoly.

fn bscale_div(p: &BPoly, d: &BigInt) -> BPoly {
    p.iter().map(|c| scale_div(c, d)).collect()
}

fn bscale_mul(p: &BPoly, m: &BigInt) -> BPoly {
    p.iter().map(|c| scale_mul(c, m)).collect()
}

/// Exact quotient in `Z[y][x]`.
pub(crate) fn bdiv_exact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lb = b.last().unwrap();
    let mut quo: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_empty() {
            continue;
        }
        let qc = div_exact(top, lb)?;
        for (j, bc) in b.iter().enumerate() {
            let prod = mul(&qc, bc);
            rem[k + j] = sub(&rem[k + j], &prod);
        }
        quo[k] = qc;
    }
    if rem.iter().any(|c| !c.is_empty()) {
        return None;
    }
    btrim(&mut quo);
    Some(quo)
}

fn beval_outer(p: &BPoly, x: &BigInt) -> UPoly {
    let width = p.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut out = vec![BigInt::zero(); width];
    for c in p.iter().rev() {
        for v in out.iter_mut() {
            *v *= x;
        }
        for (i, v) in c.iter().enumerate() {
            out[i] += v;
        }
    }
    trim(&mut out);
    out
}

/// Undo `beval_outer`: each inner coefficient is split into balanced base-`x`
/// digits, digit `j` becoming the coefficient of the outer variable `^j`.
fn binterpolate(mut h: UPoly, x: &BigInt) -> BPoly {
    let mut out: BPoly = Vec::new();
    while !h.is_empty() {
        let g: UPoly = {
            let mut g: UPoly = h.iter().map(|c| sym_mod(c, x)).collect();
            trim(&mut g);
            g
        };
        h = sub(&h, &g).iter().map(|c| c / x).collect();
        trim(&mut h);
        out.push(g);
    }
    btrim(&mut out);
    if let Some(lead) = out.last().and_then(|c| c.last()) {
        if lead.is_negative() {
            out = out.iter().map(|c| c.iter().map(|v| -v).collect()).collect();
        }
    }
    out
}

fn bprimitive_int(p: &BPoly) -> BPoly {
    let c = bcontent_int(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    bscale_div(p, &c)
}

fn bheu_gcd(f: &BPoly, g: &BPoly) -> Option<BPoly> {
    let cf = bcontent_int(f);
    let cg = bcontent_int(g);
    let c = cf.gcd(&cg);
    let f = bscale_div(f, &cf);
    let g = bscale_div(g, &cg);
    let fnorm = bmax_norm(&f);
    let gnorm = bmax_norm(&g);
    let flc = f.last().unwrap().last().unwrap().clone();
    let glc = g.last().unwrap().last().unwrap().clone();
    let mut x = heu_start(&fnorm, &gnorm, &flc, &glc);
    for _ in 0..HEU_GCD_MAX {
        let ff = beval_outer(&f, &x);
        let gg = beval_outer(&g, &x);
        if !ff.is_empty() && !gg.is_empty() {
            let h = gcd(&ff, &gg);
            let cand = bprimitive_int(&binterpolate(h.clone(), &x));
            if !cand.is_empty() && bdiv_exact(&f, &cand).is_some() && bdiv_exact(&g, &cand).is_some()
            {
                return Some(bscale_mul(&cand, &c));
            }
            for other in [&ff, &gg] {
                if let Some(co) = div_exact(other, &h) {
                    let co = bprimitive_int(&binterpolate(co, &x));
                    if co.is_empty() {
                        continue;
                    }
                    let src = if std::ptr::eq(other, &ff) { &f } else { &g };
                    if let Some(hh) = bdiv_exact(src, &co) {
                        let hh = bprimitive_int(&hh);
                        if !hh.is_empty()
                            && bdiv_exact(&f, &hh).is_some()
                            && bdiv_exact(&g, &hh).is_some()
                        {
                            return Some(bscale_mul(&hh, &c));
                        }
                    }
                }
            }
        }
        x = heu_next(&x);
    }
    None
}

/// Content of a bivariate polynomial with respect to the outer variable.
pub(crate) fn bcontent(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bpseudo_rem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r = r.iter().map(|c| mul(c, &lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = sub(&r[shift + j], &mul(&lr, bc));
        }
        btrim(&mut r);
    }
    r
}

fn bprimitive(p: &BPoly) -> (UPoly, BPoly) {
    let c = bcontent(p);
    if c.is_empty() {
        return (c, Vec::new());
    }
    let pp = p
        .iter()
        .map(|x| if x.is_empty() { Vec::new() } else { div_exact(x, &c).expect("content divides") })
        .collect();
    (c, pp)
}

fn bprs_gcd(f: &BPoly, g: &BPoly) -> BPoly {
    let (cf, mut a) = bprimitive(f);
    let (cg, mut b) = bprimitive(g);
    let c = gcd(&cf, &cg);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = bpseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { bprimitive(&r).1 };
    }
    let (_, a) = bprimitive(&a);
    a.iter().map(|x| mul(x, &c)).collect()
}

/// gcd in `Z[y][x]`, up to sign.
pub(crate) fn bgcd(f: &BPoly, g: &BPoly) -> BPoly {
    if f.is_empty() {
        return g.clone();
    }
    if g.is_empty() {
        return f.clone();
    }
    if f.len() == 1 {
        return vec![gcd(&f[0], &bcontent(g))];
    }
    if g.len() == 1 {
        return vec![gcd(&g[0], &bcontent(f))];
    }
    bheu_gcd(f, g).unwrap_or_else(|| bprs_gcd(f, g))
}

#[cfg(test)]
pub(crate) fn prs_gcd_for_tests(f: &UPoly, g: &UPoly) -> UPoly {
    prs_gcd(f, g)
}

#[cfg(test)]
pub(crate) fn bprs_gcd_for_tests(f: &BPoly, g: &BPoly) -> BPoly {
    bprs_gcd(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        let mut p: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn exact_division_detects_remainder() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(div_exact(&up(&[-1, 0, 1]), &up(&[-1, 1])), Some(up(&[1, 1])));
        assert_eq!(div_exact(&up(&[1, 0, 1]), &up(&[-1, 1])), None);
    }

    #[test]
    fn univariate_gcd_matches_prs() {
        let a = mul(&up(&[1, 1]), &up(&[1, 1, 1]));
        let b = mul(&up(&[1, 1]), &up(&[-1, 0, 2]));
        assert_eq!(gcd(&a, &b), up(&[1, 1]));
        assert_eq!(prs_gcd_for_tests(&a, &b), up(&[1, 1]));
        assert_eq!(gcd(&up(&[6, 12]), &up(&[4])), up(&[2]));
    }

    #[test]
    fn bivariate_gcd_finds_common_factor() {
        // (x*y + 1) * (x + y) and (x*y + 1) * (x - 2)
        let f1: BPoly = vec![up(&[1]), up(&[0, 1])]; // 1 + y*x  (outer x)
        let f2: BPoly = vec![up(&[0, 1]), up(&[1])]; // y + x
        let f3: BPoly = vec![up(&[-2]), up(&[1])]; // x - 2
        let mulb = |a: &BPoly, b: &BPoly| -> BPoly {
            let mut out: BPoly = vec![Vec::new(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    let p = mul(x, y);
                    let s = sub(&out[i + j], &p.iter().map(|c| -c).collect());
                    out[i + j] = s;
                }
            }
            btrim(&mut out);
            out
        };
        let a = mulb(&f1, &f2);
        let b = mulb(&f1, &f3);
        let g = bgcd(&a, &b);
        let g = if g.last().unwrap().last().unwrap().is_negative() {
            bscale_mul(&g, &BigInt::from(-1))
        } else {
            g
        };
        assert_eq!(g, f1);
        let g2 = bprs_gcd_for_tests(&a, &b);
        assert!(bdiv_exact(&g2, &f1).is_some() && bdiv_exact(&f1, &g2).is_some());
    }
}
