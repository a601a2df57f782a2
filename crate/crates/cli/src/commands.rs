//! One function per report section; subcommands run one section,
//! `report-all` runs them all and cross-checks their answers.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use matgor::builtins::{self, BUILTIN_NAMES};
use matgor::groebner::{traverse, universal_gb_probe, BuchbergerOracle};
use matgor::inverse::{catalecticant_rank_lemma, gaussian_binomial, inverse_report, AnnOracle, IdealKind};
use matgor::lattice::{order_raising_maps, FlatLattice};
use matgor::lefschetz::{slp_both, slp_hessian_check, slp_rank_check};
use matgor::poly::{hessian_det_symbolic, phi, Poly};
use matgor::polyhedral::{
    hypersurf_identities, jm_fan, phi_fan, support_function_check, tropical_hypersurface, Fan, MatroidPolytope,
    ARRANGEMENT_LIMIT,
};
use matgor::{Error, Matroid, MatroidSpec};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::expected::expected;
use crate::report::Report;
use crate::{Cli, Command, FanIdeal, Failure, IdealArg, SlpMethod, SpernerMethod};

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckAxioms => "check-axioms",
        Command::Algebra => "algebra",
        Command::Ugb { .. } => "ugb",
        Command::Lefschetz { .. } => "lefschetz",
        Command::Sperner { .. } => "sperner",
        Command::Lattice => "lattice",
        Command::Fan { .. } => "fan",
        Command::Tropical { .. } => "tropical",
        Command::ReportAll { .. } => "report-all",
    }
}

struct Ctx {
    m: Matroid,
    builtin: Option<String>,
    seed: u64,
    big: bool,
    timings: Option<BTreeMap<String, u128>>,
}

impl Ctx {
    fn expect(&self, claim: &str) -> Option<Value> {
        let name = self.builtin.as_deref()?;
        if claim == "hilbert_ann" || claim == "hilbert_jm" {
            if let Some(v) = expected(name, claim) {
                return Some(v);
            }
            return subspace_counts(name).map(|h| json!(h));
        }
        expected(name, claim)
    }

    fn timed<T>(&mut self, key: &str, f: impl FnOnce(&mut Self) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        if let Some(t) = self.timings.as_mut() {
            t.insert(key.to_string(), start.elapsed().as_millis());
        }
        out
    }

    /// Fans and the Gröbner basis probe run beyond five elements only with `--big`.
    fn big_allowed(&self, what: &str) -> Result<(), Failure> {
        if self.m.size() > ARRANGEMENT_LIMIT && !self.big {
            return Err(Failure::Guard(format!(
                "{what} on {} elements needs --big (limit {ARRANGEMENT_LIMIT})",
                self.m.size()
            )));
        }
        Ok(())
    }
}

/// Hilbert vector of `Q/J_M` predicted by counting subspaces, for the
/// projective geometries and Boolean matroids among the built-ins.
fn subspace_counts(name: &str) -> Option<Vec<u128>> {
    let (q, n) = match name {
        "m22" => (2, 2),
        "m23" | "fano" => (2, 3),
        "m32" => (3, 2),
        "plane3" => (3, 3),
        b => {
            let n: usize = b.strip_prefix("boolean:")?.parse().ok()?;
            // the Boolean matroid counts subsets: the q = 1 specialisation
            return Some((0..=n as u128).map(|k| (0..k).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))).collect());
        }
    };
    Some((0..=n).map(|k| gaussian_binomial(n, k, q)).collect())
}

fn load(cli: &Cli) -> Result<(Matroid, Option<String>), Failure> {
    if let Some(name) = &cli.builtin {
        let m = builtins::matroid(name)?;
        return Ok((m, Some(name.clone())));
    }
    let Some(path) = &cli.matroid else {
        return Err(Failure::Input("one of --builtin or --matroid is required".into()));
    };
    let text = std::fs::read_to_string(path)?;
    let m = MatroidSpec::from_json(&text)?.build()?;
    Ok((m.clone(), identify(&m)))
}

/// The built-in with exactly the same labelled bases, if any.
fn identify(m: &Matroid) -> Option<String> {
    let spec = m.canonical_spec();
    let mut names: Vec<String> = BUILTIN_NAMES.iter().filter(|n| !n.contains(':')).map(|n| n.to_string()).collect();
    names.push(format!("boolean:{}", m.size()));
    names.into_iter().find(|n| builtins::matroid(n).is_ok_and(|b| b.canonical_spec() == spec))
}

fn parse_point(text: Option<&str>, n: usize) -> Result<Vec<BigRational>, Failure> {
    let Some(text) = text else { return Ok(vec![BigRational::one(); n]) };
    let a = text
        .split(',')
        .map(|s| BigRational::from_str(s.trim()).map_err(|e| Failure::Input(format!("bad coefficient {s:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if a.len() != n {
        return Err(Failure::Input(format!("{} coefficients for {n} elements", a.len())));
    }
    Ok(a)
}

pub fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let (m, builtin) = load(cli)?;
    let input = serde_json::to_value(m.canonical_spec()).expect("spec serialises");
    let mut r = Report::new(command_name(&cli.command), cli.seed, builtin.clone(), input);
    let mut ctx = Ctx { m, builtin, seed: cli.seed, big: cli.big, timings: cli.timings.then(BTreeMap::new) };
    let mut fan_out: Option<Value> = None;
    match &cli.command {
        Command::CheckAxioms => ctx.timed("check-axioms", |c| axioms(c, &mut r))?,
        Command::Algebra => ctx.timed("algebra", |c| algebra(c, &mut r))?,
        Command::Ugb { samples } => ctx.timed("ugb", |c| ugb(c, &mut r, *samples))?,
        Command::Lefschetz { point, method, ideal } => {
            let a = parse_point(point.as_deref(), ctx.m.size())?;
            ctx.timed("lefschetz", |c| lefschetz(c, &mut r, &a, *method, *ideal))?
        }
        Command::Sperner { method } => ctx.timed("sperner", |c| sperner(c, &mut r, *method))?,
        Command::Lattice => ctx.timed("lattice", |c| lattice(c, &mut r))?,
        Command::Fan { ideal, off } => {
            let fan = ctx.timed("fan", |c| fan(c, &mut r, *ideal))?;
            fan_out = Some(serde_json::to_value(fan.to_json()).expect("fan json"));
            if let Some(path) = off {
                std::fs::write(path, MatroidPolytope::new(&ctx.m).base_polytope_off()?)?;
            }
        }
        Command::Tropical { trials } => ctx.timed("tropical", |c| tropical(c, &mut r, *trials))?,
        Command::ReportAll { samples } => report_all(&mut ctx, &mut r, *samples)?,
    }
    r.timings_ms = ctx.timings.take();
    let failed = r.finish();
    if !failed.is_empty() {
        eprintln!("failed: {}", failed.join(", "));
    }
    let report = serde_json::to_string_pretty(&r).expect("report json");
    match (&cli.out, fan_out) {
        (Some(path), Some(fan)) => {
            std::fs::write(path, serde_json::to_string_pretty(&fan).expect("json") + "\n")?;
            emit(&report);
        }
        (Some(path), None) => std::fs::write(path, report + "\n")?,
        (None, _) => emit(&report),
    }
    Ok(if r.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// A closed pipe (`matgor ... | head`) is not an error worth a panic.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn axioms(c: &mut Ctx, r: &mut Report) -> Result<(), Failure> {
    let m = &c.m;
    let ax = m.check_axioms()?;
    let classes = m.equivalence_classes()?;
    r.result(
        "axioms",
        json!({
            "elements": m.size(),
            "rank": m.rank_total(),
            "bases": m.bases().len(),
            "independent_sets": ax.independent_sets,
            "empty_set_independent": ax.empty_set_independent,
            "downward_closed": ax.downward_closed,
            "exchange": ax.exchange,
            "flats": m.flats().len(),
            "class_counts": classes.counts(),
        }),
    );
    r.check("matroid_axioms", ax.ok());
    r.check("class_complement_characterisation", m.complement_characterisation_holds(&classes));
    Ok(())
}

fn algebra(c: &mut Ctx, r: &mut Report) -> Result<(), Failure> {
    let m = &c.m;
    let inv = inverse_report(m)?;
    r.claim("hilbert_ann", inv.hilbert_ann.as_slice(), c.expect("hilbert_ann"));
    r.claim("hilbert_jm", inv.hilbert_jm.as_slice(), c.expect("hilbert_jm"));
    r.claim("gorenstein_ann", inv.gorenstein_ann, None);
    r.claim("gorenstein_jm", inv.gorenstein_jm, c.expect("gorenstein_jm"));
    r.claim("ann_equals_jm", inv.ann_equals_jm, c.expect("ann_equals_jm"));
    r.claim("extra_generators", &inv.extra_generators, c.expect("extra_generators"));
    // Q/Ann F is always Gorenstein with a symmetric Hilbert vector
    r.check("ann_quotient_gorenstein", inv.gorenstein_ann && inv.hilbert_ann.is_symmetric());
    let mut lemma = Vec::new();
    for l in 0..=m.rank_total() / 2 {
        lemma.push(catalecticant_rank_lemma(m, l)?);
    }
    r.result("catalecticant_ranks", &lemma);
    if m.size() <= 6 {
        let f = phi(m);
        let basis: Vec<Poly> = (0..m.size()).map(Poly::var).collect();
        let det = hessian_det_symbolic(&basis, &f)?;
        r.result("hessian_1", det.to_string());
        if c.builtin.as_deref() == Some("fivevec") {
            let factor = |i, j| Poly::var(i).add(&Poly::var(j));
            let product = factor(0, 3).mul(&factor(2, 4)).mul(&f.to_poly()).scale(&BigRational::from_integer(8.into()));
            r.claim("hessian_factorisation", det == product, c.expect("hessian_factorisation"));
        }
    }
    r.result("report", &inv);
    Ok(())
}

fn ugb(c: &mut Ctx, r: &mut Report, samples: usize) -> Result<(), Failure> {
    c.big_allowed("the Groebner basis probe")?;
    let rep = universal_gb_probe(&c.m, samples, c.seed)?;
    r.check("universal_groebner_basis", rep.passed);
    r.result("ugb", &rep);
    Ok(())
}

fn lefschetz(c: &mut Ctx, r: &mut Report, a: &[BigRational], method: SlpMethod, ideal: IdealArg) -> Result<(), Failure> {
    let kind = match ideal {
        IdealArg::Ann => IdealKind::Ann,
        IdealArg::Jm => IdealKind::Jm,
    };
    match method {
        SlpMethod::Rank => {
            let rep = slp_rank_check(&c.m, a, kind)?;
            r.check("slp_rank", rep.pass);
            r.result("rank", &rep);
        }
        SlpMethod::Hessian => {
            let rep = slp_hessian_check(&c.m, a)?;
            r.check("slp_hessian", rep.pass);
            r.result("hessian", &rep);
        }
        SlpMethod::Both => {
            let both = slp_both(&c.m, a)?;
            r.check("slp_rank", both.rank.pass);
            r.check("slp_hessian", both.hessian.pass);
            r.check("slp_method_agreement", both.agree);
            if kind == IdealKind::Jm {
                let jm = slp_rank_check(&c.m, a, kind)?;
                r.check("slp_rank_jm", jm.pass);
                r.result("rank_jm", &jm);
            }
            r.result("rank", &both.rank);
            r.result("hessian", &both.hessian);
        }
    }
    Ok(())
}

fn sperner(c: &mut Ctx, r: &mut Report, method: SpernerMethod) -> Result<(), Failure> {
    let lat = FlatLattice::new(&c.m)?;
    let dilworth = lat.sperner_check()?;
    let mut out = json!({
        "sperner": dilworth.sperner,
        "max_level": dilworth.max_level,
        "max_antichain": dilworth.max_antichain,
    });
    if method != SpernerMethod::Dilworth {
        match order_raising_maps(&c.m, None, c.seed) {
            Ok(cert) => {
                out["lefschetz_certificate"] = json!(cert.certificate);
                out["method_agreement"] = json!(cert.certificate == dilworth.sperner);
                if method == SpernerMethod::Both {
                    r.check("dilworth_lefschetz_agreement", cert.certificate == dilworth.sperner);
                } else {
                    r.check("lefschetz_certificate", cert.certificate);
                }
                r.result("raising_maps", &cert);
            }
            Err(Error::DimensionMismatch(why)) => {
                out["lefschetz_certificate"] = Value::Null;
                out["method_agreement"] = Value::Null;
                r.result("raising_maps_not_applicable", why);
            }
            Err(e) => return Err(e.into()),
        }
    }
    r.claim("sperner", dilworth.sperner, None);
    r.result("sperner", out);
    Ok(())
}

fn lattice(c: &mut Ctx, r: &mut Report) -> Result<(), Failure> {
    let lat = FlatLattice::new(&c.m)?;
    let p = lat.predicates()?;
    r.claim("geometric", p.geometric, c.expect("geometric"));
    r.claim("modular", p.modular, c.expect("modular"));
    r.claim("atoms", p.n_atoms, c.expect("atoms"));
    r.claim("coatoms", p.n_coatoms, c.expect("coatoms"));
    r.check("graded", p.graded);
    r.result("level_sizes", lat.level_sizes());
    r.result("predicates", &p);
    Ok(())
}

fn rays_json(f: &Fan) -> Value {
    serde_json::to_value(f.to_json().rays).expect("rays")
}

fn negated_rays(f: &Fan) -> Value {
    let mut neg: Vec<Vec<i64>> = f.to_json().rays.into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    neg.sort();
    json!(neg)
}

fn fan_jm(c: &mut Ctx, r: &mut Report) -> Result<Fan, Failure> {
    c.big_allowed("the Groebner fan of J_M")?;
    if c.m.size() > ARRANGEMENT_LIMIT {
        eprintln!("warning: traversing the Groebner fan of J_M on {} elements", c.m.size());
    }
    let f = jm_fan(&c.m)?;
    r.claim("fan_jm_counts", f.counts(), c.expect("fan_jm_counts"));
    r.claim("fan_jm_rays", rays_json(&f), c.expect("fan_jm_rays"));
    if c.m.size() <= ARRANGEMENT_LIMIT {
        r.check("fan_jm_complete", f.is_complete() && f.intersections_are_faces());
    }
    Ok(f)
}

fn fan_ann(c: &mut Ctx, r: &mut Report) -> Result<Fan, Failure> {
    c.big_allowed("the Groebner fan of Ann")?;
    let oracle = AnnOracle::new(&phi(&c.m), c.m.size())?;
    let f = traverse(&oracle, c.seed, c.big)?.fan();
    r.claim("fan_ann_counts", f.counts(), c.expect("fan_ann_counts"));
    r.claim("fan_ann_rays", rays_json(&f), c.expect("fan_ann_rays"));
    Ok(f)
}

fn fan_phi(c: &mut Ctx, r: &mut Report) -> Result<Fan, Failure> {
    let f = phi_fan(&c.m);
    r.claim("fan_phi_counts", f.counts(), c.expect("fan_phi_counts"));
    r.claim("fan_phi_maximal", f.counts().maximal, c.expect("fan_phi_maximal"));
    if c.m.size() <= ARRANGEMENT_LIMIT {
        let oracle = BuchbergerOracle::new(c.m.size(), vec![phi(&c.m).to_poly()]);
        let t = traverse(&oracle, c.seed, false)?.fan();
        r.check("fan_phi_matches_traversal", t.ray_set() == f.ray_set() && t.counts() == f.counts());
    }
    Ok(f)
}

fn fan(c: &mut Ctx, r: &mut Report, ideal: FanIdeal) -> Result<Fan, Failure> {
    let f = match ideal {
        FanIdeal::Jm => fan_jm(c, r)?,
        FanIdeal::Ann => {
            let ann = fan_ann(c, r)?;
            let jm = jm_fan(&c.m)?;
            fan_relations(c, r, &ann, &jm);
            ann
        }
        FanIdeal::Phi => {
            let p = fan_phi(c, r)?;
            if c.m.size() <= ARRANGEMENT_LIMIT || c.big {
                let jm = jm_fan(&c.m)?;
                r.claim("phi_rays_are_negated_jm_rays", rays_json(&p) == negated_rays(&jm), c.expect("phi_rays_are_negated_jm_rays"));
            }
            p
        }
    };
    r.result("fan", f.to_json());
    Ok(f)
}

fn fan_relations(c: &Ctx, r: &mut Report, ann: &Fan, jm: &Fan) {
    let refines = ann.refines(jm);
    r.claim("ann_refines_jm", refines, c.expect("ann_refines_jm"));
    let equal = ann.ray_set() == jm.ray_set() && ann.counts() == jm.counts() && refines;
    r.claim("fan_ann_equals_jm", equal, c.expect("fan_ann_equals_jm"));
}

fn tropical(c: &mut Ctx, r: &mut Report, trials: usize) -> Result<(), Failure> {
    let sf = support_function_check(&c.m, trials, c.seed);
    r.check("support_function", sf.passed);
    r.result("support_function", &sf);
    let v = tropical_hypersurface(&phi(&c.m), c.m.size());
    r.claim("vtrop_phi_rays", rays_json(&v), c.expect("vtrop_phi_rays"));
    r.result("vtrop_phi", v.to_json());
    c.big_allowed("the hypersurface identities")?;
    let ids = hypersurf_identities(&c.m)?;
    r.check("identity_1", ids.id1);
    r.check("identity_2", ids.id2);
    r.check("identity_3", ids.id3);
    r.check("subcomplex", ids.corollary);
    r.result("identities", &ids);
    Ok(())
}

fn report_all(c: &mut Ctx, r: &mut Report, samples: usize) -> Result<(), Failure> {
    c.timed("check-axioms", |c| axioms(c, r))?;
    c.timed("algebra", |c| algebra(c, r))?;
    if c.m.size() <= ARRANGEMENT_LIMIT || c.big {
        c.timed("ugb", |c| ugb(c, r, samples))?;
    }
    c.timed("lattice", |c| lattice(c, r))?;
    c.timed("sperner", |c| sperner(c, r, SpernerMethod::Both))?;
    let ones = vec![BigRational::one(); c.m.size()];
    c.timed("lefschetz", |c| lefschetz(c, r, &ones, SlpMethod::Both, IdealArg::Ann))?;

    // Q/J_M is Gorenstein exactly when the lattice of flats is modular geometric
    let gor = r.claims.iter().find(|x| x.name == "gorenstein_jm").map(|x| x.computed.clone());
    let p = FlatLattice::new(&c.m)?.predicates()?;
    r.check("gorenstein_iff_modular_geometric", gor == Some(json!(p.modular && p.geometric)));

    if c.m.size() <= ARRANGEMENT_LIMIT || c.big {
        let (jm, ann, phi_f) = c.timed("fans", |c| -> Result<_, Failure> {
            Ok((fan_jm(c, r)?, fan_ann(c, r)?, fan_phi(c, r)?))
        })?;
        fan_relations(c, r, &ann, &jm);
        r.claim("phi_rays_are_negated_jm_rays", rays_json(&phi_f) == negated_rays(&jm), c.expect("phi_rays_are_negated_jm_rays"));
        r.result("fan_jm", jm.to_json());
        r.result("fan_ann", ann.to_json());
        r.result("fan_phi", phi_f.to_json());
        c.timed("tropical", |c| tropical(c, r, 100))?;
    } else {
        r.result("skipped", format!("fans, identities and the basis probe on {} elements; rerun with --big", c.m.size()));
        let sf = support_function_check(&c.m, 100, c.seed);
        r.check("support_function", sf.passed);
    }
    Ok(())
}
