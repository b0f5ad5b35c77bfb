use nalgebra::DVector;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use super::{catalog, declared_for, identity, IdentityRecord, RowKind, Val};
use crate::error::SuiteError;
use crate::models::ModelEntry;
use crate::sampling::{random_vector, rng_for};
use crate::structure::{sample_structure_point, Hypothesis, StructurePoint, WeakStructure};

/// Hypothesis classes are verified at `max(tol, HYPOTHESIS_FLOOR)`, so a very
/// strict run tolerance does not turn round-off into a violated hypothesis.
pub const HYPOTHESIS_FLOOR: f64 = 1e-8;
/// Redraws allowed when a tuple evaluates to NaN.
const MAX_REDRAWS: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub points: usize,
    pub tuples: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { points: 100, tuples: 8, seed: 42, tol: 1e-8 }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.points == 0 {
            return Err(SuiteError::InvalidConfig("points must be at least 1".into()));
        }
        if self.tuples == 0 {
            return Err(SuiteError::InvalidConfig("tuples must be at least 1".into()));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(SuiteError::InvalidConfig(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }

    fn hypothesis_tol(&self) -> f64 {
        self.tol.max(HYPOTHESIS_FLOOR)
    }
}

/// Identities whose residuals decide each hypothesis class.
fn defining_rows(h: Hypothesis) -> &'static [&'static str] {
    match h {
        Hypothesis::HAny => &[],
        Hypothesis::H0 => &["AX-1", "AX-2", "AX-3", "AX-4", "AX-5", "AX-6"],
        Hypothesis::H1 => &["NS-0"],
        Hypothesis::H2a => &["QPAR-1"],
        Hypothesis::H2b => &["CI-1"],
        Hypothesis::H3 => &["QPAR-1", "CI-1"],
        Hypothesis::Sasakian => &["E-nS-Sas"],
        Hypothesis::WeakContact => &["WC-1"],
    }
}

/// Per-identity residual statistics over all samples of one model.
#[derive(Clone, Debug, Default)]
struct Stats {
    n: usize,
    max: f64,
    sum: f64,
    degenerate: usize,
}

impl Stats {
    fn push(&mut self, r: Option<f64>) {
        match r {
            Some(r) => {
                self.n += 1;
                self.max = self.max.max(r);
                self.sum += r;
            }
            None => self.degenerate += 1,
        }
    }

    fn merge(&mut self, o: &Stats) {
        self.n += o.n;
        self.max = self.max.max(o.max);
        self.sum += o.sum;
        self.degenerate += o.degenerate;
    }

    fn max_residual(&self) -> f64 {
        if self.degenerate > 0 {
            f64::INFINITY
        } else {
            self.max
        }
    }

    fn mean(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.sum / self.n as f64
        }
    }
}

/// Residual of `rec` at a point for one seeded tuple, redrawing on NaN.
fn sample_residual(rec: &IdentityRecord, sp: &StructurePoint, rng: &mut impl rand::Rng) -> Option<f64> {
    let d = sp.dim();
    for _ in 0..MAX_REDRAWS {
        let args: Vec<DVector<f64>> = (0..rec.arity).map(|_| random_vector(rng, d)).collect();
        let r = rec.residual(sp, &args);
        if !r.is_nan() {
            return Some(r);
        }
    }
    None
}

/// Relative residual of `rec` on `args` at `p`.
pub fn evaluate_identity(
    rec: &IdentityRecord,
    s: &WeakStructure,
    p: &[f64],
    args: &[DVector<f64>],
) -> Result<f64, SuiteError> {
    if args.len() != rec.arity {
        return Err(SuiteError::ArityMismatch { id: rec.id.to_string(), expected: rec.arity, got: args.len() });
    }
    let sp = s.at(p)?;
    let r = rec.residual(&sp, args);
    if r.is_nan() {
        return Err(SuiteError::Degenerate(rec.id.to_string()));
    }
    Ok(r)
}

/// Largest deviation from homogeneity when one slot is doubled. Each side of
/// each equality must be linear in the slot or not depend on it:
/// `min(|f(2X) − 2f(X)|, |f(2X) − f(X)|) / (1 + |f(X)|)`.
pub fn multilinearity_defect(rec: &IdentityRecord, sp: &StructurePoint, args: &[DVector<f64>]) -> f64 {
    let base = (rec.eval)(sp, args);
    let mut worst: f64 = 0.0;
    for i in 0..args.len() {
        let mut scaled = args.to_vec();
        scaled[i] *= 2.0;
        let doubled = (rec.eval)(sp, &scaled);
        for ((l0, r0), (l1, r1)) in base.iter().zip(&doubled) {
            for (a, b) in [(l0, l1), (r0, r1)] {
                let dev = match (a, b) {
                    (Val::S(a), Val::S(b)) => (b - 2.0 * a).abs().min((b - a).abs()) / (1.0 + a.abs()),
                    (Val::V(a), Val::V(b)) => (b - a * 2.0).norm().min((b - a).norm()) / (1.0 + a.norm()),
                    _ => f64::INFINITY,
                };
                worst = worst.max(dev);
            }
        }
    }
    worst
}

/// Seeded points of one structure, in order. Failures are kept in place.
pub(crate) fn sample_points(s: &WeakStructure, cfg: &RunConfig) -> Vec<Result<StructurePoint, String>> {
    (0..cfg.points)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(cfg.seed, s.name(), i as u64);
            sample_structure_point(s, &mut rng).map_err(|e| format!("point {i}: {e}"))
        })
        .collect()
}

/// Residual statistics of `records` on `s`; each record draws tuples from
/// its own stream so the result does not depend on which rows are selected.
fn collect_stats(
    s: &WeakStructure,
    points: &[Result<StructurePoint, String>],
    records: &[&IdentityRecord],
    cfg: &RunConfig,
) -> Vec<Stats> {
    let per_point: Vec<Vec<Stats>> = points
        .par_iter()
        .enumerate()
        .map(|(i, sp)| {
            records
                .iter()
                .map(|rec| {
                    let mut st = Stats::default();
                    match sp {
                        Ok(sp) => {
                            let tag = format!("{}/{}", s.name(), rec.id);
                            let mut rng = rng_for(cfg.seed, &tag, i as u64);
                            for _ in 0..cfg.tuples {
                                st.push(sample_residual(rec, sp, &mut rng));
                            }
                        }
                        Err(_) => st.degenerate += 1,
                    }
                    st
                })
                .collect()
        })
        .collect();
    let mut total = vec![Stats::default(); records.len()];
    for row in &per_point {
        for (t, st) in total.iter_mut().zip(row) {
            t.merge(st);
        }
    }
    total
}

/// Whether each declared class of `s` holds on the sampled points.
pub fn verify_hypotheses(s: &WeakStructure, cfg: &RunConfig) -> Result<Vec<(Hypothesis, bool)>, SuiteError> {
    cfg.validate()?;
    let points = sample_points(s, cfg);
    verify_on(s, &points, cfg, s.declared())
}

pub(crate) fn verify_on(
    s: &WeakStructure,
    points: &[Result<StructurePoint, String>],
    cfg: &RunConfig,
    classes: &[Hypothesis],
) -> Result<Vec<(Hypothesis, bool)>, SuiteError> {
    let mut ids: Vec<&'static str> = classes.iter().flat_map(|&h| defining_rows(h).iter().copied()).collect();
    ids.sort_unstable();
    ids.dedup();
    let records: Vec<&IdentityRecord> = ids.iter().map(|id| identity(id)).collect::<Result<_, _>>()?;
    let stats = collect_stats(s, points, &records, cfg);
    let ok = |id: &str| {
        let k = ids.iter().position(|x| *x == id).expect("collected above");
        stats[k].max_residual() < cfg.hypothesis_tol()
    };
    Ok(classes.iter().map(|&h| (h, defining_rows(h).iter().all(|id| ok(id)))).collect())
}

/// One (model, identity) line of a suite report.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteRow {
    pub model: String,
    pub identity: &'static str,
    pub hypothesis: Hypothesis,
    pub kind: RowKind,
    /// The model declares the row's hypothesis class; otherwise the row is informational.
    pub applicable: bool,
    /// Declared and verified by sampling.
    pub hypothesis_ok: bool,
    pub n: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    /// `max_residual` is below the row tolerance.
    pub pass: bool,
    pub note: String,
}

impl SuiteRow {
    /// An applicable row that does not hold.
    pub fn is_failure(&self) -> bool {
        self.applicable && !(self.hypothesis_ok && self.pass)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub config: RunConfig,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn all_applicable_pass(&self) -> bool {
        self.rows.iter().all(|r| !r.is_failure())
    }

    /// Failing applicable rows, largest residual first.
    pub fn failures_by_residual(&self) -> Vec<&SuiteRow> {
        let mut f: Vec<&SuiteRow> = self.rows.iter().filter(|r| r.is_failure()).collect();
        f.sort_by(|a, b| b.max_residual.total_cmp(&a.max_residual).then(a.identity.cmp(b.identity)));
        f
    }

    pub fn row(&self, model: &str, id: &str) -> Option<&SuiteRow> {
        self.rows.iter().find(|r| r.model == model && r.identity == id)
    }

    /// Canonical JSON: fixed key order, floats with 17 significant digits,
    /// non-finite values as `null`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Run<'a> {
            seed: u64,
            tol: &'a RawValue,
            points: usize,
            tuples: usize,
        }
        #[derive(Serialize)]
        struct Row<'a> {
            model: &'a str,
            identity: &'a str,
            hypothesis: &'a str,
            applicable: bool,
            hypothesis_ok: bool,
            n: usize,
            max_residual: Box<RawValue>,
            mean_residual: Box<RawValue>,
            pass: bool,
            note: &'a str,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            schema: u32,
            run: Run<'a>,
            rows: Vec<Row<'a>>,
        }
        let tol = float_json(self.config.tol);
        let doc = Doc {
            schema: 1,
            run: Run { seed: self.config.seed, tol: &tol, points: self.config.points, tuples: self.config.tuples },
            rows: self
                .rows
                .iter()
                .map(|r| Row {
                    model: &r.model,
                    identity: r.identity,
                    hypothesis: r.hypothesis.label(),
                    applicable: r.applicable,
                    hypothesis_ok: r.hypothesis_ok,
                    n: r.n,
                    max_residual: float_json(r.max_residual),
                    mean_residual: float_json(r.mean_residual),
                    pass: r.pass,
                    note: &r.note,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

/// A float as a JSON number with 17 significant digits, or `null`.
pub fn float_json(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format!("{x:.16e}") } else { "null".to_string() };
    RawValue::from_string(text).expect("valid JSON number")
}

fn row_note(rec: &IdentityRecord, s: &WeakStructure, verified: &[(Hypothesis, bool)], st: &Stats, pass: bool) -> String {
    let mut notes: Vec<String> = Vec::new();
    let missing: Vec<&str> =
        rec.hypothesis.implied().iter().filter(|h| !s.declares(**h)).map(|h| h.label()).collect();
    let unverified: Vec<&str> = rec
        .hypothesis
        .implied()
        .iter()
        .filter(|h| verified.iter().any(|(v, ok)| v == *h && !ok))
        .map(|h| h.label())
        .collect();
    if !missing.is_empty() {
        notes.push(format!("informational: {} not declared", missing.join("+")));
    } else if !unverified.is_empty() {
        notes.push(format!("declared {} not verified by sampling", unverified.join("+")));
    }
    if rec.kind == RowKind::ProofChain {
        if missing.is_empty() && unverified.is_empty() && !pass {
            notes.push("proof step fails while its hypotheses hold: implementation bug or erratum".into());
        } else {
            notes.push("proof step".into());
        }
    }
    if let Some(e) = rec.erratum {
        notes.push(format!("reading: {e}"));
    }
    if rec.needs_fields {
        notes.push("field-level".into());
    }
    if st.degenerate > 0 {
        notes.push(format!("{} degenerate samples", st.degenerate));
    }
    notes.join("; ")
}

/// Evaluates every selected identity on every model.
///
/// Rows come out in model order, then catalog order of the selection.
/// Hypothesis classes a row relies on are re-verified on the same points
/// before the row counts as applicable.
pub fn run_suite(
    models: &[&ModelEntry],
    identities: &[&'static IdentityRecord],
    cfg: &RunConfig,
) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let mut rows = Vec::new();
    if identities.is_empty() {
        return Ok(SuiteReport { config: cfg.clone(), rows });
    }
    let order = |rec: &IdentityRecord| catalog().iter().position(|r| r.id == rec.id).unwrap_or(usize::MAX);
    let mut selected: Vec<&IdentityRecord> = identities.to_vec();
    selected.sort_by_key(|r| order(r));
    selected.dedup_by_key(|r| r.id);

    for m in models {
        let s = m.structure();
        let points = sample_points(s, cfg);
        let verified = verify_on(s, &points, cfg, s.declared())?;
        let stats = collect_stats(s, &points, &selected, cfg);
        for (rec, st) in selected.iter().zip(&stats) {
            let applicable = declared_for(s, rec);
            let hypothesis_ok = applicable
                && rec.hypothesis.implied().iter().all(|h| verified.iter().any(|(v, ok)| v == h && *ok));
            let max_residual = st.max_residual();
            let pass = max_residual < cfg.tol * rec.tolerance_factor();
            rows.push(SuiteRow {
                model: s.name().to_string(),
                identity: rec.id,
                hypothesis: rec.hypothesis,
                kind: rec.kind,
                applicable,
                hypothesis_ok,
                n: st.n,
                max_residual,
                mean_residual: st.mean(),
                pass,
                note: row_note(rec, s, &verified, st, pass),
            });
        }
    }
    Ok(SuiteReport { config: cfg.clone(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::select;
    use crate::models::{model, registry};
    use crate::structure::Profile;

    fn small() -> RunConfig {
        RunConfig { points: 4, tuples: 3, seed: 11, tol: 1e-8 }
    }

    /// `sas-r5` with φ scaled by 1.1: every φ-axiom breaks while the
    /// declaration still claims a Sasakian structure.
    fn faulty() -> ModelEntry {
        let base = model("sas-r5").unwrap();
        let s = base.structure().clone().with_name("sas-r5-fault").map_fields(|_, mut f| {
            for row in &mut f.phi {
                for e in row.iter_mut() {
                    *e *= 1.1;
                }
            }
            f
        });
        ModelEntry::new(s, Profile::SASAKIAN, "fault injection")
    }

    #[test]
    fn config_validation() {
        assert!(small().validate().is_ok());
        for bad in [
            RunConfig { points: 0, ..small() },
            RunConfig { tuples: 0, ..small() },
            RunConfig { tol: -1.0, ..small() },
            RunConfig { tol: f64::NAN, ..small() },
        ] {
            assert!(matches!(bad.validate(), Err(SuiteError::InvalidConfig(_))));
        }
    }

    #[test]
    fn arity_is_checked() {
        let m = model("sas-r5").unwrap();
        let rec = identity("NS-0").unwrap();
        let p = vec![0.1; 5];
        let err = evaluate_identity(rec, m.structure(), &p, &[DVector::zeros(5)]).unwrap_err();
        assert!(matches!(err, SuiteError::ArityMismatch { expected: 2, got: 1, .. }));
    }

    #[test]
    fn documented_single_evaluations() {
        let mut rng = rng_for(1, "doc", 0);
        let args = |rng: &mut rand_chacha::ChaCha8Rng, k: usize, d: usize| -> Vec<DVector<f64>> {
            (0..k).map(|_| random_vector(rng, d)).collect()
        };
        let sas = model("sas-r5").unwrap();
        let p = sas.structure().base().sample_point(&mut rng);
        let r = evaluate_identity(identity("L1-b").unwrap(), sas.structure(), &p, &args(&mut rng, 1, 5)).unwrap();
        assert!(r < 1e-14, "{r:e}");

        let ns = model("nsas-s5").unwrap();
        let p = ns.structure().base().sample_point(&mut rng);
        let r = evaluate_identity(identity("L2-a").unwrap(), ns.structure(), &p, &args(&mut rng, 2, 5)).unwrap();
        assert!(r < 1e-8, "{r:e}");
    }

    #[test]
    fn sasakian_formula_is_informational_on_the_nearly_sasakian_sphere() {
        let ns = model("nsas-s5").unwrap();
        let rep = run_suite(&[&ns], &select("E-nS-Sas").unwrap(), &small()).unwrap();
        let row = &rep.rows[0];
        assert!(!row.applicable && !row.hypothesis_ok);
        assert!(row.note.starts_with("informational"));
        assert!(row.max_residual >= 0.3, "{}", row.max_residual);
        assert!(!row.is_failure());
        assert!(rep.all_applicable_pass());
    }

    #[test]
    fn empty_selection_gives_empty_report() {
        let ms = registry();
        let refs: Vec<&ModelEntry> = ms.iter().collect();
        let rep = run_suite(&refs, &[], &small()).unwrap();
        assert!(rep.rows.is_empty());
        assert!(rep.all_applicable_pass());
    }

    #[test]
    fn selection_order_and_duplicates_do_not_matter() {
        let m = model("sas-s5").unwrap();
        let a = run_suite(&[&m], &select("GEO-1,AX-1,NS-0").unwrap(), &small()).unwrap();
        let b = run_suite(&[&m], &select("NS-0, GEO-1 ,AX-1,NS-0").unwrap(), &small()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let ids: Vec<&str> = a.rows.iter().map(|r| r.identity).collect();
        assert_eq!(ids, ["AX-1", "NS-0", "GEO-1"]);
    }

    #[test]
    fn row_residuals_do_not_depend_on_the_selection() {
        let m = model("nsas-s5").unwrap();
        let one = run_suite(&[&m], &select("L1-a").unwrap(), &small()).unwrap();
        let many = run_suite(&[&m], &select("AX-1,L1-a,L2-b").unwrap(), &small()).unwrap();
        assert_eq!(one.rows[0], *many.row("nsas-s5", "L1-a").unwrap());
    }

    #[test]
    fn json_is_deterministic_and_canonical() {
        let m = model("sas-r5").unwrap();
        let ids = select("AX-1,NS-0,TF-1").unwrap();
        let a = run_suite(&[&m], &ids, &small()).unwrap().to_json();
        let b = run_suite(&[&m], &ids, &small()).unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["run"]["seed"], 11);
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert!(a.contains("\"tol\": 1.0000000000000000e-8"));
    }

    #[test]
    fn float_formatting() {
        assert_eq!(float_json(0.1).get(), "1.0000000000000001e-1");
        assert_eq!(float_json(f64::INFINITY).get(), "null");
        assert_eq!(float_json(f64::NAN).get(), "null");
    }

    #[test]
    fn injected_fault_is_reported_worst_first() {
        let m = faulty();
        let rep = run_suite(&[&m], &select("all").unwrap(), &small()).unwrap();
        assert!(!rep.all_applicable_pass());
        let fails = rep.failures_by_residual();
        assert!(fails.iter().any(|r| r.identity == "AX-1"));
        for w in fails.windows(2) {
            assert!(w[0].max_residual >= w[1].max_residual);
        }
        let verified = verify_hypotheses(m.structure(), &small()).unwrap();
        assert!(verified.iter().any(|(h, ok)| *h == Hypothesis::H0 && !ok));
    }

    #[test]
    fn proof_steps_failing_under_verified_hypotheses_are_called_out() {
        let m = model("nsas-s5").unwrap();
        let rep = run_suite(&[&m], &select("PC-1,PC-6").unwrap(), &small()).unwrap();
        let ok = rep.row("nsas-s5", "PC-1").unwrap();
        assert!(ok.pass && ok.note == "proof step");
        let bad = rep.row("nsas-s5", "PC-6").unwrap();
        assert!(bad.hypothesis_ok && !bad.pass);
        assert!(bad.note.contains("implementation bug or erratum"));
    }
}
