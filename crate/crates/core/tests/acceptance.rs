//! Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use dyck_chi::chi::verify::{
    block_swap_instances, verify_alpha, verify_block_swap, verify_closed_forms, verify_corner_flip,
    verify_main_theorem, verify_multinomial, verify_omega_bar, verify_rev_invariance,
    verify_schur_positivity, verify_zeta_bijection, verify_zeta_conjugation, Report,
};
use dyck_chi::{all_paths, chi, partitions_of, Cell, DyckPath, Partition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn path(s: &str) -> DyckPath {
    s.parse().expect("valid path")
}

fn cells(v: &[(usize, usize)]) -> BTreeSet<Cell> {
    v.iter().copied().map(Cell::from).collect()
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(partitions_of).collect()
}

fn paths_up_to(n: usize) -> Vec<DyckPath> {
    (0..=n).flat_map(all_paths).collect()
}

/// Fails with the first failing report, otherwise returns the count.
fn all_pass(reports: impl IntoIterator<Item = Report>) -> Outcome {
    let mut count = 0;
    for r in reports {
        if !r.pass {
            return Err(serde_json::to_string(&r).expect("report serialises"));
        }
        count += 1;
    }
    Ok(format!("{count} instances"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main_theorem() -> Outcome {
    let lambdas = partitions_up_to(6);
    ensure(lambdas.len() == 29, || {
        format!("expected 29 partitions, got {}", lambdas.len())
    })?;
    for lam in &lambdas {
        // Direct comparison of the normalised slices, independent of the report plumbing.
        let inv = chi(&lam.path_inv()).func;
        let quinv = chi(&lam.path_quinv()).func;
        let top = (lam.size() - lam.part(1)) as i32;
        let a_inv = lam.alpha_inv() as i32;
        let a_quinv = lam.alpha_quinv() as i32;
        ensure(
            quinv.t_slice(0).scale_monomial(-a_quinv, 0)
                == inv.t_slice(0).scale_monomial(-a_inv, 0),
            || format!("q-Whittaker slices differ for {lam}"),
        )?;
        ensure(quinv.t_slice(top) == inv.t_slice(top), || {
            format!("Hall-Littlewood slices differ for {lam}")
        })?;
        ensure(!inv.t_slice(top).is_zero(), || {
            format!("empty top slice for {lam}")
        })?;
        let out = verify_main_theorem(lam);
        ensure(out.report.pass, || {
            serde_json::to_string(&out.report).unwrap()
        })?;
    }
    Ok(format!("{} partitions", lambdas.len()))
}

fn golden_fixtures() -> Outcome {
    let sample = path("NNENEENNENEE");
    ensure(
        sample.area_cells() == cells(&[(1, 2), (2, 3), (4, 5), (5, 6)]),
        || "sample area".into(),
    )?;
    ensure(sample.corners() == cells(&[(1, 3), (3, 4), (4, 6)]), || {
        "sample corners".into()
    })?;
    ensure(sample.x_coords() == vec![1, 1, 2, 4, 4, 5], || {
        "sample x-coordinates".into()
    })?;

    ensure(path("NENNENEE").reverse() == path("NNENEENE"), || {
        "reversal of NENNENEE".into()
    })?;

    let z = sample.zeta();
    ensure(z == path("NNENNENNEEEE"), || {
        format!("zeta of sample gave {z}")
    })?;
    ensure(
        sample.reading_labels().sigma == vec![1, 3, 4, 2, 5, 6],
        || "sample sigma".into(),
    )?;
    ensure(z.corners() == cells(&[(1, 3), (2, 5)]), || {
        "corners of zeta(sample)".into()
    })?;
    ensure(z.area() == sample.dinv_pairs().len(), || {
        "area of zeta vs dinv pairs".into()
    })?;

    let lam: Partition = "3,2".parse().unwrap();
    ensure(lam.path_inv() == path("NNENENNEEE"), || {
        format!("Inv path of (3,2): {}", lam.path_inv())
    })?;
    ensure(lam.path_quinv() == path("NNNENENEEE"), || {
        format!("Quinv path of (3,2): {}", lam.path_quinv())
    })?;
    let balanced = lam.path_balanced();
    ensure(balanced == path("NENNEENNEE"), || {
        format!("balanced path {balanced}")
    })?;
    ensure(balanced.zeta() == lam.path_inv().reverse(), || {
        "zeta of balanced (3,2) path".into()
    })?;
    Ok("path statistics, maps and (3,2) paths".into())
}

fn map_identities() -> Outcome {
    let lambdas = partitions_up_to(8);
    all_pass(lambdas.iter().map(verify_zeta_conjugation))?;
    let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &c) in catalan.iter().enumerate() {
        ensure(all_paths(n).len() == c, || format!("Catalan({n})"))?;
    }
    all_pass((0..=8).map(verify_zeta_bijection))?;
    Ok(format!("{} partitions, semilengths 0..=8", lambdas.len()))
}

fn rev_invariance() -> Outcome {
    let paths = paths_up_to(6);
    ensure(paths.len() == 197, || {
        format!("expected 197 paths, got {}", paths.len())
    })?;
    all_pass(paths.iter().map(verify_rev_invariance))
}

fn block_swaps() -> Outcome {
    let instances = block_swap_instances(6);
    all_pass(instances.iter().map(|(blocks, i)| {
        verify_block_swap(blocks, *i).expect("instance satisfies the swap precondition")
    }))
}

/// Arm sums read straight off the diagram, used as an oracle for the alpha exponents.
fn alpha_oracle(lam: &Partition) -> (usize, usize) {
    let rows = lam.parts();
    let col_height = |c: usize| rows.iter().filter(|&&r| r >= c).count();
    let (mut inv, mut quinv) = (0, 0);
    for (r0, &len) in rows.iter().enumerate() {
        for c in 1..=len {
            let arm = len - c;
            let leg = col_height(c) - (r0 + 1);
            if r0 > 0 {
                inv += arm;
            }
            if leg > 0 {
                quinv += arm;
            }
        }
    }
    (inv, quinv)
}

fn alpha_exponents() -> Outcome {
    let lambdas = partitions_up_to(10);
    for lam in &lambdas {
        let (inv, quinv) = alpha_oracle(lam);
        ensure((lam.alpha_inv(), lam.alpha_quinv()) == (inv, quinv), || {
            format!("alpha mismatch for {lam}: oracle ({inv}, {quinv})")
        })?;
    }
    all_pass(lambdas.iter().map(verify_alpha))
}

fn closed_forms() -> Outcome {
    all_pass((1..=6).flat_map(verify_closed_forms))
}

fn corner_flip_and_omega() -> Outcome {
    let paths = paths_up_to(5);
    all_pass(paths.iter().map(verify_corner_flip))?;
    all_pass(paths.iter().map(verify_omega_bar))
}

fn schur_positivity() -> Outcome {
    let paths = paths_up_to(6);
    ensure(paths.len() == 197, || {
        format!("expected 197 paths, got {}", paths.len())
    })?;
    all_pass(paths.iter().map(verify_schur_positivity))
}

fn multinomial() -> Outcome {
    all_pass(paths_up_to(5).iter().map(verify_multinomial))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("main theorem, |lambda| <= 6", main_theorem),
        ("golden fixtures", golden_fixtures),
        (
            "zeta/reversal path identities, |lambda| <= 8, zeta bijective n <= 8",
            map_identities,
        ),
        ("chi(rev pi) = chi(pi), n <= 6", rev_invariance),
        ("block swaps and splices, sum <= 6", block_swaps),
        (
            "alpha difference and pair counts, |lambda| <= 10",
            alpha_exponents,
        ),
        ("closed forms and hook coefficients, n <= 6", closed_forms),
        ("corner flip and omega-bar, n <= 5", corner_flip_and_omega),
        ("Schur positivity, n <= 6", schur_positivity),
        ("chi(pi, 1, 1) multinomial, n <= 5", multinomial),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}, {secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
