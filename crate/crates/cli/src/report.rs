use std::fmt::Write as _;

use gt_core::hilbert::{
    hf_by_counting, hf_closed_form, hf_reduced_with, hilbert_data, surface_invariants,
    surface_profile, HilbertData, Integrity, SurfaceInvariants, SurfaceProfile,
};
use gt_core::invariants::{invariant_monomials, CyclicAction, ExponentVector};
use gt_core::resolution::{
    betti_table, check_series, generator_counts, BettiTable, GeneratorCounts, RationalSeries,
};
use gt_core::semigroup::{
    is_normal_up_to, trung_cm_check, AffineSemigroup, NormalityReport, TrungReport, TrungStatus,
};
use gt_core::serde_big::rational;
use gt_core::togliatti::{classify as classify_action, GtClassification};
use gt_core::toric::{
    degree_four_check, minimal_generators, BinomialGeneratorSet, DegreeFourCheck,
};
use serde::Serialize;
use serde_json::Value;

use crate::{catalogue, CliError, EXIT_CHECK_FAILED, EXIT_DISCREPANCY, EXIT_OK};

pub trait Report {
    fn table(&self) -> String;
    fn json(&self) -> Value;
    fn exit_code(&self) -> u8 {
        EXIT_OK
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn polynomial(coeffs: &[i64], var: &str) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match k {
            0 => write!(out, "{mag}").unwrap(),
            _ => {
                if mag != 1 {
                    write!(out, "{mag} ").unwrap();
                }
                out.push_str(var);
                if k > 1 {
                    write!(out, "^{k}").unwrap();
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Level {
    pub t: u32,
    pub degree: u64,
    pub count: usize,
    pub monomials: Vec<ExponentVector>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub action: CyclicAction,
    pub levels: Vec<Level>,
}

pub fn invariants(action: &CyclicAction, horizon: u32) -> InvariantsReport {
    let levels = (1..=horizon)
        .map(|t| {
            let basis = invariant_monomials(action, t);
            Level {
                t,
                degree: u64::from(t) * u64::from(action.order()),
                count: basis.count,
                monomials: basis.monomials,
            }
        })
        .collect();
    InvariantsReport {
        action: action.clone(),
        levels,
    }
}

impl Report for InvariantsReport {
    fn table(&self) -> String {
        let mut s = format!("action {}\n", self.action);
        for l in &self.levels {
            writeln!(s, "t = {}, degree {}: {} monomials", l.t, l.degree, l.count).unwrap();
            for m in &l.monomials {
                writeln!(s, "  {}", m.monomial_string()).unwrap();
            }
        }
        s
    }

    fn json(&self) -> Value {
        to_json(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport(pub GtClassification);

pub fn classify(action: &CyclicAction) -> ClassifyReport {
    ClassifyReport(classify_action(action))
}

impl Report for ClassifyReport {
    fn table(&self) -> String {
        let c = &self.0;
        let mut s = format!("action {}\n", c.action);
        writeln!(s, "mu_d                    {}", c.mu_d).unwrap();
        writeln!(s, "togliatti bound         {}", c.bound).unwrap();
        writeln!(s, "togliatti candidate     {}", c.is_togliatti_candidate).unwrap();
        writeln!(
            s,
            "x L in degree {}         {:?}, dims {} -> {}, rank {}",
            c.wlp.degree, c.wlp.test, c.wlp.source_dim, c.wlp.target_dim, c.wlp.rank
        )
        .unwrap();
        writeln!(s, "wlp fails at d-1        {}", c.wlp_fails_at_d_minus_1).unwrap();
        writeln!(s, "kernel dimension        {}", c.kernel_dimension).unwrap();
        writeln!(s, "is_gt_system = {}", c.is_gt_system).unwrap();
        s
    }

    fn json(&self) -> Value {
        to_json(&self.0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RouteRow {
    pub t: u32,
    pub counting: u64,
    pub reduced: u64,
    pub closed_form: Option<u64>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertReport {
    pub profile: SurfaceProfile,
    pub invariants: Option<SurfaceInvariants>,
    pub series: Option<HilbertData>,
    pub routes: Vec<RouteRow>,
    /// Differences from published reference values; informational only.
    pub notes: Vec<String>,
    /// Disagreements between the internal computations.
    pub discrepancies: Vec<String>,
}

pub fn hilbert(a: u32, b: u32, d: u32, horizon: u32) -> Result<HilbertReport, CliError> {
    let profile = surface_profile(a, b, d)?;
    let mut discrepancies = Vec::new();
    if let Integrity::Discrepancy {
        theta_formula,
        theta_counted,
    } = profile.integrity
    {
        discrepancies.push(format!(
            "θ formula gives {theta_formula}, counting gives {theta_counted}"
        ));
    }
    let invariants = surface_invariants(&profile)
        .map_err(|e| discrepancies.push(e.to_string()))
        .ok();
    let series = hilbert_data(&profile, horizon)
        .map_err(|e| discrepancies.push(e.to_string()))
        .ok();
    let action = profile.params.action();
    let routes: Vec<RouteRow> = (0..=horizon)
        .map(|t| {
            let counting = hf_by_counting(&action, t);
            let reduced = hf_reduced_with(&profile.params, t);
            let closed_form = hf_closed_form(&profile, t).ok();
            RouteRow {
                t,
                counting,
                reduced,
                closed_form,
                agree: reduced == counting && closed_form == Some(counting),
            }
        })
        .collect();
    for r in routes.iter().filter(|r| !r.agree) {
        discrepancies.push(format!(
            "HF({}) differs: counting {}, reduced {}, closed form {:?}",
            r.t, r.counting, r.reduced, r.closed_form
        ));
    }
    let notes = catalogue::note(&profile).into_iter().collect();
    Ok(HilbertReport {
        profile,
        invariants,
        series,
        routes,
        notes,
        discrepancies,
    })
}

impl Report for HilbertReport {
    fn table(&self) -> String {
        let p = &self.profile.params;
        let mut s = format!("surface (a, b, d) = ({}, {}, {})\n", p.a, p.b, p.d);
        writeln!(
            s,
            "  (a,d) = {}  (b,d) = {}  a' = {}  b' = {}  d' = {}  d'' = {}",
            p.gcd_ad, p.gcd_bd, p.a_prime, p.b_prime, p.d_prime, p.d_double_prime
        )
        .unwrap();
        writeln!(
            s,
            "  lambda = {}  mu = {}  theta = {}  counted theta = {}  counted mu_d = {}",
            p.lambda, p.mu, p.theta, self.profile.theta_counted, self.profile.mu_d_counted
        )
        .unwrap();
        if let Some(inv) = &self.invariants {
            writeln!(
                s,
                "mu_d = {}  degree = {}  codim = {}  cm_type = {}  reg = {}",
                inv.mu_d, inv.degree, inv.codim, inv.cm_type, inv.reg
            )
            .unwrap();
        }
        if let Some(h) = &self.series {
            let hp: Vec<String> = h.polynomial.iter().map(rational::to_string).collect();
            writeln!(s, "HP(t) = {} t^2 + {} t + {}", hp[0], hp[1], hp[2]).unwrap();
            writeln!(
                s,
                "HS(z) = ({}) / (1 - z)^{}",
                polynomial(&h.numerator, "z"),
                h.denominator_exponent
            )
            .unwrap();
        }
        writeln!(
            s,
            "{:>4} {:>10} {:>10} {:>12}",
            "t", "counting", "reduced", "closed form"
        )
        .unwrap();
        for r in &self.routes {
            let closed = r
                .closed_form
                .map_or_else(|| "-".to_string(), |v| v.to_string());
            let mark = if r.agree { "" } else { "  MISMATCH" };
            writeln!(
                s,
                "{:>4} {:>10} {:>10} {:>12}{mark}",
                r.t, r.counting, r.reduced, closed
            )
            .unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        for d in &self.discrepancies {
            writeln!(s, "DISCREPANCY: {d}").unwrap();
        }
        s
    }

    fn json(&self) -> Value {
        to_json(self)
    }

    fn exit_code(&self) -> u8 {
        if self.discrepancies.is_empty() {
            EXIT_OK
        } else {
            EXIT_DISCREPANCY
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiReport {
    pub profile: SurfaceProfile,
    pub betti: BettiTable,
    pub generator_counts: GeneratorCounts,
    /// Counts from exact ranks on the toric ideal, when `mu_d <= TORIC_CHECK_MAX_MU`.
    pub toric_counts: Option<GeneratorCounts>,
    pub series: Option<RationalSeries>,
    pub discrepancies: Vec<String>,
}

pub const TORIC_CHECK_MAX_MU: usize = 16;

pub fn betti(a: u32, b: u32, d: u32) -> Result<BettiReport, CliError> {
    let profile = surface_profile(a, b, d)?;
    let mut discrepancies = Vec::new();
    if !profile.is_consistent() {
        discrepancies.push(format!("θ integrity check failed: {:?}", profile.integrity));
    }
    let betti = betti_table(&profile);
    let counts = generator_counts(&profile);
    if (counts.quadrics, counts.cubics) != (betti.get(1, 1), betti.get(1, 2)) {
        discrepancies.push("generator counts differ from the first Betti column".into());
    }
    let series = check_series(&profile)
        .map_err(|e| discrepancies.push(e.to_string()))
        .ok();
    let toric_counts = (profile.mu_d_counted <= TORIC_CHECK_MAX_MU)
        .then(|| minimal_generators(&profile.params.action()).counts);
    if let Some(tc) = toric_counts.filter(|tc| *tc != counts) {
        discrepancies.push(format!(
            "toric ideal has {} quadrics and {} cubics as minimal generators",
            tc.quadrics, tc.cubics
        ));
    }
    Ok(BettiReport {
        profile,
        betti,
        generator_counts: counts,
        toric_counts,
        series,
        discrepancies,
    })
}

/// Rows `i` (twist `l + i`), columns `l`, with the `S` term at `(0, 0)`.
pub fn betti_grid(t: &BettiTable) -> String {
    let cols = t.c as usize + 1;
    let cell = |l: usize, i: u64| -> u64 {
        match (l, i) {
            (0, 0) => 1,
            (0, _) => 0,
            _ => t.get(l as u64, i),
        }
    };
    let width = (0..cols)
        .flat_map(|l| (0..=2).map(move |i| (l, i)))
        .map(|(l, i)| cell(l, i).to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    let mut s = format!("{:>7}", "");
    for l in 0..cols {
        write!(s, " {l:>width$}").unwrap();
    }
    s.push('\n');
    write!(s, "{:>7}", "total:").unwrap();
    for l in 0..cols {
        write!(s, " {:>width$}", (0..=2).map(|i| cell(l, i)).sum::<u64>()).unwrap();
    }
    s.push('\n');
    for i in 0..=2 {
        write!(s, "{:>7}", format!("{i}:")).unwrap();
        for l in 0..cols {
            let v = cell(l, i);
            let text = if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            };
            write!(s, " {text:>width$}").unwrap();
        }
        s.push('\n');
    }
    s
}

impl Report for BettiReport {
    fn table(&self) -> String {
        let p = &self.profile.params;
        let t = &self.betti;
        let mut s = format!(
            "surface (a, b, d) = ({}, {}, {}), theta = {}, mu_d = {}, c = {}, h = {}\n",
            p.a, p.b, p.d, p.theta, t.mu_d, t.c, t.h
        );
        s.push_str(&betti_grid(t));
        writeln!(
            s,
            "closed-form generator counts: {} quadrics, {} cubics",
            self.generator_counts.quadrics, self.generator_counts.cubics
        )
        .unwrap();
        if let Some(r) = &self.series {
            writeln!(
                s,
                "series from Betti numbers: ({}) / (1 - z)^{}",
                polynomial(&r.numerator, "z"),
                r.denominator_exponent
            )
            .unwrap();
        }
        for d in &self.discrepancies {
            writeln!(s, "DISCREPANCY: {d}").unwrap();
        }
        s
    }

    fn json(&self) -> Value {
        to_json(self)
    }

    fn exit_code(&self) -> u8 {
        if self.discrepancies.is_empty() {
            EXIT_OK
        } else {
            EXIT_DISCREPANCY
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub action: CyclicAction,
    #[serde(flatten)]
    pub set: BinomialGeneratorSet,
    pub quadric_strings: Vec<String>,
    pub cubic_strings: Vec<String>,
    /// Closed-form counts, for surface actions `(d; 0, a, b)`.
    pub expected: Option<GeneratorCounts>,
    pub degree_four: Option<DegreeFourCheck>,
    pub relations_ok: bool,
    pub discrepancies: Vec<String>,
}

fn surface_triple(action: &CyclicAction) -> Option<(u32, u32, u32)> {
    match action.sorted().weights() {
        &[0, a, b] if 0 < a && a < b => Some((a, b, action.order())),
        _ => None,
    }
}

pub fn ideal(action: &CyclicAction) -> Result<IdealReport, CliError> {
    let set = minimal_generators(action);
    let relations_ok = set
        .quadrics
        .iter()
        .chain(&set.cubics)
        .all(|b| b.is_relation(&set.generators));
    let mut discrepancies = Vec::new();
    if !relations_ok {
        discrepancies.push("an emitted binomial is not a relation".into());
    }
    let (expected, degree_four) = match surface_triple(action) {
        Some((a, b, d)) => {
            let expected = generator_counts(&surface_profile(a, b, d)?);
            if expected != set.counts {
                discrepancies.push(format!(
                    "rank computation gives {:?}, closed form gives {expected:?}",
                    set.counts
                ));
            }
            let four = degree_four_check(action);
            if !four.no_new_generators {
                discrepancies.push(format!("degree 4 needs new generators: {four:?}"));
            }
            (Some(expected), Some(four))
        }
        None => (None, None),
    };
    Ok(IdealReport {
        action: action.clone(),
        quadric_strings: set.quadrics.iter().map(|b| b.display()).collect(),
        cubic_strings: set.cubics.iter().map(|b| b.display()).collect(),
        set,
        expected,
        degree_four,
        relations_ok,
        discrepancies,
    })
}

impl Report for IdealReport {
    fn table(&self) -> String {
        let mut s = format!("action {}\n", self.action);
        for (k, g) in self.set.generators.iter().enumerate() {
            writeln!(s, "  w{} = {}", k + 1, g.monomial_string()).unwrap();
        }
        writeln!(s, "quadrics: {}", self.set.counts.quadrics).unwrap();
        for q in &self.quadric_strings {
            writeln!(s, "  {q}").unwrap();
        }
        writeln!(s, "cubics: {}", self.set.counts.cubics).unwrap();
        for c in &self.cubic_strings {
            writeln!(s, "  {c}").unwrap();
        }
        if let Some(e) = &self.expected {
            writeln!(
                s,
                "closed-form counts: {} quadrics, {} cubics",
                e.quadrics, e.cubics
            )
            .unwrap();
        }
        if let Some(f) = &self.degree_four {
            writeln!(
                s,
                "degree 4: dim I_4 = {}, rank of S_1 I_3 = {}",
                f.ideal_dimension, f.lifted_rank
            )
            .unwrap();
        }
        let scope = if self.set.complete {
            "complete".to_string()
        } else {
            format!(
                "verified through degree {}",
                self.set.verified_through_degree
            )
        };
        writeln!(s, "generating set: {scope}").unwrap();
        for d in &self.discrepancies {
            writeln!(s, "DISCREPANCY: {d}").unwrap();
        }
        s
    }

    fn json(&self) -> Value {
        to_json(self)
    }

    fn exit_code(&self) -> u8 {
        if self.discrepancies.is_empty() {
            EXIT_OK
        } else {
            EXIT_DISCREPANCY
        }
    }
}

fn trung_lines(s: &mut String, r: &TrungReport) {
    let f: Vec<String> = r
        .f_indices
        .iter()
        .map(|&k| vector(&r.semigroup.generators()[k].to_signed()))
        .collect();
    writeln!(
        s,
        "f = {}, z = {}, hypothesis holds: {}",
        f.join(", "),
        r.z,
        r.hypothesis_ok
    )
    .unwrap();
    match (&r.status, &r.witness) {
        (TrungStatus::Counterexample, Some(w)) => writeln!(
            s,
            "Cohen-Macaulay criterion: counterexample at level {}: w = {} with w + f_{} and w + f_{} in H (confirmed: {})",
            w.level,
            vector(&w.w),
            w.i + 1,
            w.j + 1,
            w.confirmed
        )
        .unwrap(),
        _ => writeln!(s, "Cohen-Macaulay criterion: verified up to degree {}", r.bound).unwrap(),
    }
    writeln!(
        s,
        "search: {} candidates, level sizes {:?}",
        r.stats.candidates_examined, r.stats.level_sizes
    )
    .unwrap();
}

fn generator_lines(s: &mut String, h: &AffineSemigroup) {
    writeln!(
        s,
        "{} generators of degree {}:",
        h.generators().len(),
        h.degree()
    )
    .unwrap();
    let gens: Vec<String> = h
        .generators()
        .iter()
        .map(|g| vector(&g.to_signed()))
        .collect();
    for chunk in gens.chunks(6) {
        writeln!(s, "  {}", chunk.join(" ")).unwrap();
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupReport {
    pub semigroup: AffineSemigroup,
    pub normality: NormalityReport,
    pub trung: TrungReport,
}

pub fn semigroup(h: AffineSemigroup, bound: u32) -> Result<SemigroupReport, CliError> {
    let normality = is_normal_up_to(&h, bound)?;
    let trung = trung_cm_check(&h, bound)?;
    Ok(SemigroupReport {
        semigroup: h,
        normality,
        trung,
    })
}

fn witness_unconfirmed(r: &TrungReport) -> bool {
    r.witness.as_ref().is_some_and(|w| !w.confirmed)
}

impl Report for SemigroupReport {
    fn table(&self) -> String {
        let mut s = String::new();
        generator_lines(&mut s, &self.semigroup);
        match &self.normality.witness {
            Some(w) => writeln!(
                s,
                "normality: fails, {} is in the saturation but not in H",
                vector(w)
            )
            .unwrap(),
            None => writeln!(s, "normality: holds up to degree {}", self.normality.bound).unwrap(),
        }
        trung_lines(&mut s, &self.trung);
        s
    }

    fn json(&self) -> Value {
        to_json(self)
    }

    fn exit_code(&self) -> u8 {
        if witness_unconfirmed(&self.trung) {
            EXIT_DISCREPANCY
        } else {
            EXIT_OK
        }
    }
}

/// Constructed family member; a counterexample is a failed check.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub name: String,
    pub semigroup: AffineSemigroup,
    pub generator_count: usize,
    pub trung: TrungReport,
}

pub fn family(name: String, h: AffineSemigroup, bound: u32) -> Result<FamilyReport, CliError> {
    let trung = trung_cm_check(&h, bound)?;
    Ok(FamilyReport {
        name,
        generator_count: h.generators().len(),
        semigroup: h,
        trung,
    })
}

impl Report for FamilyReport {
    fn table(&self) -> String {
        let mut s = format!("{}\n", self.name);
        generator_lines(&mut s, &self.semigroup);
        trung_lines(&mut s, &self.trung);
        s
    }

    fn json(&self) -> Value {
        to_json(self)
    }

    fn exit_code(&self) -> u8 {
        if witness_unconfirmed(&self.trung) {
            EXIT_DISCREPANCY
        } else if self.trung.verified() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }
}
