//! Acceptance harness: one pass/fail line per criterion, each with its time
//! budget. Every check is exact.

use std::any::Any;
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use moulde::ari::named::generator_flow_check;
use moulde::ari::{
    fundamental_identity_check, ganit_bar, infinitesimal_generator, log_ari, named_mould, tnc_mould, NamedMould,
};
use moulde::exact::rational::{int, rat};
use moulde::fixtures::{a3, a3_ell, abar5, b3, bbar5, bpsi, psi5, psi5_tail, psi5y};
use moulde::maps::{both_elliptic_suites, lkv_to_krv_ell, square_check, verify_xi_image};
use moulde::mould::{
    circ_constant, circ_constant_strict, circ_neutral, delta_inv, is_alternal, ma_neg, pari, star_correction, swap,
    StarProperty,
};
use moulde::properties::{check_property_seeds, Property};
use moulde::spaces::{dimension_table, krv_ell_member, lkv_member, lkv_mould_member, solve, Space};
use moulde::words::derivation::{divergence_constant, trace_power_defect};
use moulde::words::push::push_constant_value;
use moulde::words::{
    divergence, is_lie_element, is_push_constant, is_push_invariant, nu_twist, partner, partner_d,
    tail_form_circ_constant_value, CircMode, DerivationPair, Letter, NCPoly, Word,
};

type Check = Result<String, String>;

/// Number, name, time budget in seconds, and the check.
type Criterion = (u32, &'static str, u64, fn() -> Check);

/// Fails the criterion with `msg` unless `cond` holds.
fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn seeds(props: &[Property], count: u64) -> Check {
    for &p in props {
        check_property_seeds(p, 0, count)
            .map_err(|o| format!("{p} fails at seed {}: {}", o.seed, o.witness.unwrap_or_default()))?;
    }
    let names: Vec<&str> = props.iter().map(|p| p.name()).collect();
    Ok(format!("{} × {count} seeds", names.join(", ")))
}

fn b5() -> NCPoly {
    solve(Space::Vkrv, 5, 1).unwrap().words[0].clone()
}

fn c1_weight_three_krv() -> Check {
    let x = NCPoly::x();
    let y = NCPoly::y();
    let a = partner(&b3()).map_err(|e| e.to_string())?;
    ensure(a == a3(), "partner(b3) ≠ a3")?;
    ensure((&x.bracket(&a) + &y.bracket(&b3())).is_zero(), "[x,a3] + [y,b3] ≠ 0")?;
    let e = DerivationPair::e(a.clone(), b3());
    ensure(e.apply(&(&x + &y)).is_zero(), "E_{a3,b3} does not kill x + y")?;
    // The normalization sending x ↦ b3 kills [x,y].
    let d = DerivationPair::d(b3(), partner_d(&b3()).map_err(|e| e.to_string())?);
    ensure(d.apply(&x.bracket(&y)).is_zero(), "D_{b3,·} does not kill [x,y]")?;
    let div = divergence(&e).map_err(|e| e.to_string())?;
    ensure(div == trace_power_defect(3).scale(&rat(1, 3)), "divergence ≠ (1/3)·tr((x+y)³ − x³ − y³)")?;
    let c = b3().coeff(Word::parse("xxy").unwrap()) / int(3);
    ensure(c == rat(1, 3), "(b3 | x²y)/3 ≠ 1/3")?;
    ensure(divergence_constant(&e).map_err(|e| e.to_string())? == Some(c), "divergence constant ≠ (b3 | x²y)/3")?;
    Ok("partner, annihilation, divergence constant 1/3".into())
}

fn c2_weight_five_pair() -> Check {
    let s = &NCPoly::x().bracket(&abar5()) + &NCPoly::y().bracket(&bbar5());
    ensure(s.is_zero(), "[x,ā] + [y,b̄] ≠ 0")?;
    ensure(is_push_invariant(&bbar5()), "b̄ is not push-invariant")?;
    Ok("[x,ā] + [y,b̄] = 0, b̄ push-invariant".into())
}

fn c3_push_and_circ_constant_fixtures() -> Check {
    ensure(push_constant_value(&psi5y()) == Some(int(1)), "psi5y is not push-constant with value 1")?;
    ensure(is_push_constant(&psi5y(), &int(1)), "psi5y fails is_push_constant(1)")?;
    ensure(is_lie_element(&psi5()).map_err(|e| e.to_string())?, "ψ is not Lie")?;
    ensure(psi5().strip_last(Letter::Y).mul(&NCPoly::y()) == psi5_tail(), "ψ^y·y is not the tail of ψ")?;
    ensure(
        tail_form_circ_constant_value(&psi5_tail(), CircMode::Star) == Some(int(1)),
        "ψ^y·y is not circ-constant with value 1",
    )?;
    let (verdict, c) = circ_constant(&bpsi(), None).map_err(|e| e.to_string())?;
    ensure(verdict.holds, format!("Bpsi is not circ-constant: {verdict}"))?;
    ensure(c == Some(int(1)), "Bpsi constant ≠ 1")?;
    Ok("push constant 1, circ constant 1 on words and mould".into())
}

fn c4_a3_star_correction() -> Check {
    let b = delta_inv(&a3_ell());
    ensure(is_alternal(&b).holds, "Δ⁻¹(A3) is not alternal")?;
    let corr = star_correction(&swap(&b), StarProperty::Alternal);
    ensure(corr == Some(vec![(3, rat(1, 3))]), format!("star correction {corr:?}"))?;
    Ok("Δ⁻¹(A3) alternal, swap needs 1/3 in depth 3".into())
}

fn c5_operator_identities() -> Check {
    seeds(&[Property::SwapInvolution, Property::PushOrder, Property::NegPush, Property::GanitInverse], 100)
}

fn c6_bracket_correspondences() -> Check {
    seeds(&[Property::LuBracket, Property::AriPoisson, Property::DariAngle, Property::DariRoutes], 60)
}

fn c7_closure() -> Check {
    seeds(&[Property::AriAlternal, Property::AriBarCircNeutral, Property::AriConstant], 50)
}

fn c8_dimension_tables() -> Check {
    let lkv = dimension_table(Space::Lkv, 3..=10, 1..=3).map_err(|e| e.to_string())?;
    let ls = dimension_table(Space::Ls, 3..=10, 1..=3).map_err(|e| e.to_string())?;
    ensure(lkv.cells == ls.cells, "ls and lkv dimensions differ")?;
    for c in &lkv.cells {
        let r = c.r.unwrap();
        // Opposite parity forces zero; same-parity cells may vanish too at low weight.
        ensure((c.n + r) % 2 == 0 || c.dim == 0, format!("nonzero cell ({}, {r}) of opposite parity", c.n))?;
    }
    let gr = dimension_table(Space::GrKrv, 3..=8, 1..=7).map_err(|e| e.to_string())?;
    for c in &gr.cells {
        let r = c.r.unwrap();
        let l = solve(Space::Lkv, c.n, r).map_err(|e| e.to_string())?.dim();
        ensure(c.dim <= l, format!("gr krv exceeds lkv at ({}, {r})", c.n))?;
    }
    let mut checked = 0;
    // Depth 4 is empty below weight 12, so (12, 4) is added as a nonvacuous instance.
    for n in (5..=10).chain([12]) {
        let ls = solve(Space::Ls, n, 4).map_err(|e| e.to_string())?;
        for (w, m) in ls.words.iter().zip(&ls.moulds) {
            ensure(lkv_mould_member(m).holds() && lkv_member(w).holds(), format!("ls ⊄ lkv at ({n}, 4)"))?;
            checked += 1;
        }
    }
    ensure(checked > 0, "no depth-4 ls elements checked")?;
    Ok(format!(
        "{} cells equal, gr krv ≤ lkv on {} cells, {checked} depth-4 ls elements in lkv",
        lkv.cells.len(),
        gr.cells.len()
    ))
}

fn c9_pil_pal_stack() -> Check {
    let c = infinitesimal_generator(9);
    ensure(c[0] == rat(-1, 2), format!("c₁ = {}", c[0]))?;
    ensure(generator_flow_check(9), "flow does not reproduce 1 − e^(−x) to degree 9")?;
    let lopil = named_mould(NamedMould::Lopil, 4).map_err(|e| e.to_string())?;
    ensure(is_alternal(&lopil).holds, "lopil is not alternal")?;
    ensure(circ_neutral(&lopil).map_err(|e| e.to_string())?.holds, "lopil is not circ-neutral")?;
    let pal = named_mould(NamedMould::Pal, 4).map_err(|e| e.to_string())?;
    let lp = log_ari(&pal, 4).map_err(|e| e.to_string())?;
    ensure(is_alternal(&lp).holds, "log_ari(pal) is not alternal")?;
    Ok("c₁ = −1/2, flow exact to degree 9, lopil and log pal alternal".into())
}

fn c10_fundamental_identity() -> Check {
    for (name, b) in [("b3", b3()), ("b5", b5())] {
        let n = pari(&ma_neg(&nu_twist(&b)).map_err(|e| e.to_string())?);
        let rep = fundamental_identity_check(&n, 4).map_err(|e| e.to_string())?;
        ensure(rep.hypothesis, format!("{name}: push-invariance hypothesis fails"))?;
        ensure(rep.holds, format!("{name}: sides differ in depth {:?}", rep.first_difference))?;
    }
    Ok("weights 3 and 5 to depth 4".into())
}

fn c11_xi_pipeline() -> Check {
    for (name, b) in [("b3", b3()), ("b5", b5())] {
        let rep = verify_xi_image(&ma_neg(&nu_twist(&b)).map_err(|e| e.to_string())?, 4);
        for check in ["push_invariant", "alternal", "swap_circ_neutral_star", "ari_delta"] {
            let c = rep.checks.checks.iter().find(|c| c.name == check);
            ensure(c.is_some_and(|c| c.verdict.holds), format!("{name}: {check} fails\n{rep}"))?;
        }
        ensure(rep.holds(), format!("{name}:\n{rep}"))?;
    }
    Ok("four verdicts true at weights 3 and 5".into())
}

fn c12_tnc() -> Check {
    for n in 3..=7 {
        let t = tnc_mould(n, &int(1));
        let (v, c) = circ_constant_strict(&t, Some(n)).map_err(|e| e.to_string())?;
        ensure(v.holds && c == Some(int(1)), format!("T^{n}_1 is not circ-constant: {v}"))?;
        let poc = named_mould(NamedMould::Poc, n).map_err(|e| e.to_string())?;
        let g = ganit_bar(&poc, &pari(&t)).map_err(|e| e.to_string())?;
        ensure((2..=n).all(|r| g.value_ref(r).is_some()), format!("n = {n}: missing depths"))?;
        let v = circ_neutral(&g).map_err(|e| e.to_string())?;
        ensure(v.holds, format!("n = {n}: {v}"))?;
    }
    Ok("n = 3..7".into())
}

fn c13_lkv_embedding() -> Check {
    let mut count = 0;
    for n in 3..=9 {
        for r in 1..n {
            for b in solve(Space::Lkv, n, r).map_err(|e| e.to_string())?.words {
                let im = lkv_to_krv_ell(&b).map_err(|e| e.to_string())?;
                ensure(im.routes_agree, format!("({n}, {r}): routes differ"))?;
                ensure(im.krv_ell.holds(), format!("({n}, {r}):\n{}", im.krv_ell))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} basis elements"))
}

fn c14_square() -> Check {
    let (ds, krv) = both_elliptic_suites(&a3_ell());
    ensure(ds.holds(), format!("A3 ∉ ds_ell:\n{ds}"))?;
    ensure(krv.holds(), format!("A3 ∉ krv_ell:\n{krv}"))?;
    let mut count = 0;
    for n in 3..=8 {
        for r in 1..=3 {
            for p in solve(Space::DsEll, n, r).map_err(|e| e.to_string())?.moulds {
                ensure(krv_ell_member(&p).holds(), format!("ds_ell ⊄ krv_ell at ({n}, {r})"))?;
                count += 1;
            }
        }
        let rep = square_check(n, 3, 4).map_err(|e| e.to_string())?;
        ensure(rep.holds(), format!("{rep}"))?;
    }
    Ok(format!("A3 in both; {count} ds_ell elements in krv_ell"))
}

fn c15_cli() -> Check {
    let bin = env!("CARGO_BIN_EXE_moulde");
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let mut cases: Vec<(Vec<&str>, &str)> =
        ["poc", "pic", "lopil"].into_iter().map(|m| (vec!["dump", "--mould", m, "--depth", "4"], m)).collect();
    cases.push((vec!["dims", "--space", "lkv", "--n", "3..10", "--r", "1..3"], "lkv_dims"));
    cases.push((vec!["dims", "--space", "ls", "--n", "3..10", "--r", "1..3"], "ls_dims"));
    for (args, name) in &cases {
        let golden = fs::read(golden_dir.join(format!("{name}.txt"))).map_err(|e| e.to_string())?;
        for _ in 0..2 {
            let o = run(args)?;
            ensure(o.status.code() == Some(0), format!("{name}: exit {:?}", o.status.code()))?;
            ensure(o.stdout == golden, format!("{name}: output differs from golden file"))?;
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).map(|_| p.to_string_lossy().into_owned()).map_err(|e| e.to_string())
    };
    let good = write("b3.txt", "xxy - 2*xyx + yxx")?;
    let not_member = write("xb3.txt", &NCPoly::x().bracket(&b3()).to_text())?;
    let bad = write("bad.txt", "1*xz")?;
    let expect = [
        (vec!["check", "--identity", "fundamental", "--input", good.as_str(), "--depth", "3"], 0),
        (vec!["check", "--space", "lkv", "--input", not_member.as_str()], 1),
        (vec!["check", "--space", "lkv", "--input", bad.as_str()], 2),
        (vec!["frobnicate"], 2),
    ];
    for (args, code) in &expect {
        let o = run(args)?;
        ensure(o.status.code() == Some(*code), format!("{args:?}: exit {:?}, expected {code}", o.status.code()))?;
    }
    Ok("5 golden outputs stable over two runs; exit codes 0/1/2".into())
}

fn panic_message(e: Box<dyn Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 15] = [
        (1, "weight-3 krv example", 1, c1_weight_three_krv),
        (2, "weight-5 depth-graded pair", 1, c2_weight_five_pair),
        (3, "push- and circ-constant fixtures", 1, c3_push_and_circ_constant_fixtures),
        (4, "A3 star correction", 1, c4_a3_star_correction),
        (5, "operator identities", 30, c5_operator_identities),
        (6, "bracket correspondences", 60, c6_bracket_correspondences),
        (7, "closure properties", 60, c7_closure),
        (8, "dimension tables", 600, c8_dimension_tables),
        (9, "pil/pal stack", 300, c9_pil_pal_stack),
        (10, "fundamental identity", 300, c10_fundamental_identity),
        (11, "Ξ pipeline", 300, c11_xi_pipeline),
        (12, "circ-constant T^n_c under ganit(poc)", 120, c12_tnc),
        (13, "lkv → krv_ell embedding", 300, c13_lkv_embedding),
        (14, "ds_ell ⊂ krv_ell square", 300, c14_square),
        (15, "CLI golden files and exit codes", 60, c15_cli),
    ];
    let mut failed = Vec::new();
    for (id, name, budget, f) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| Err(panic_message(e)));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= Duration::from_secs(budget) {
                Ok(detail)
            } else {
                Err(format!("over the {budget} s budget"))
            }
        });
        match &result {
            Ok(detail) => println!("criterion {id}: PASS  {name} ({detail}) [{:.2} s]", elapsed.as_secs_f64()),
            Err(why) => {
                println!("criterion {id}: FAIL  {name}: {why} [{:.2} s]", elapsed.as_secs_f64());
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
