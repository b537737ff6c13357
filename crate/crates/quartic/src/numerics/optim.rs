//! Nelder–Mead simplex minimization in two variables, with a multistart
//! wrapper for objectives that have several local basins.

/// Minimize `f` from a starting point with given initial step sizes.
/// Returns (argmin, min value).
pub fn nelder_mead_2d<F: Fn(f64, f64) -> f64>(
    f: F,
    x0: (f64, f64),
    step: (f64, f64),
    max_iter: usize,
    ftol: f64,
) -> ((f64, f64), f64) {
    let mut simplex = [
        (x0.0, x0.1),
        (x0.0 + step.0, x0.1),
        (x0.0, x0.1 + step.1),
    ];
    let mut fv = [
        f(simplex[0].0, simplex[0].1),
        f(simplex[1].0, simplex[1].1),
        f(simplex[2].0, simplex[2].1),
    ];
    for _ in 0..max_iter {
        // order: 0 best, 2 worst
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| fv[i].partial_cmp(&fv[j]).unwrap_or(std::cmp::Ordering::Equal));
        let (b, m, w) = (idx[0], idx[1], idx[2]);
        if (fv[w] - fv[b]).abs() <= ftol * (1.0 + fv[b].abs()) {
            break;
        }
        let cen = (
            0.5 * (simplex[b].0 + simplex[m].0),
            0.5 * (simplex[b].1 + simplex[m].1),
        );
        let refl = (2.0 * cen.0 - simplex[w].0, 2.0 * cen.1 - simplex[w].1);
        let fr = f(refl.0, refl.1);
        if fr < fv[b] {
            let exp = (cen.0 + 2.0 * (refl.0 - cen.0), cen.1 + 2.0 * (refl.1 - cen.1));
            let fe = f(exp.0, exp.1);
            if fe < fr {
                simplex[w] = exp;
                fv[w] = fe;
            } else {
                simplex[w] = refl;
                fv[w] = fr;
            }
        } else if fr < fv[m] {
            simplex[w] = refl;
            fv[w] = fr;
        } else {
            let con = (
                cen.0 + 0.5 * (simplex[w].0 - cen.0),
                cen.1 + 0.5 * (simplex[w].1 - cen.1),
            );
            let fcn = f(con.0, con.1);
            if fcn < fv[w] {
                simplex[w] = con;
                fv[w] = fcn;
            } else {
                // shrink toward best
                for i in 0..3 {
                    if i == b {
                        continue;
                    }
                    simplex[i] = (
                        simplex[b].0 + 0.5 * (simplex[i].0 - simplex[b].0),
                        simplex[b].1 + 0.5 * (simplex[i].1 - simplex[b].1),
                    );
                    fv[i] = f(simplex[i].0, simplex[i].1);
                }
            }
        }
    }
    let mut best = 0;
    for i in 1..3 {
        if fv[i] < fv[best] {
            best = i;
        }
    }
    (simplex[best], fv[best])
}

/// Multistart wrapper: run Nelder–Mead from every point of the supplied grid
/// and keep the overall best.
pub fn minimize_2d_multistart<F: Fn(f64, f64) -> f64>(
    f: &F,
    starts: &[(f64, f64)],
    step: (f64, f64),
    max_iter: usize,
    ftol: f64,
) -> ((f64, f64), f64) {
    let mut best = ((f64::NAN, f64::NAN), f64::INFINITY);
    for &s in starts {
        let cand = nelder_mead_2d(f, s, step, max_iter, ftol);
        if cand.1 < best.1 {
            best = cand;
        }
    }
    best
}
