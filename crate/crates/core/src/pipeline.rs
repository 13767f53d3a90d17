//! The end-to-end obstruction argument for a matroid `M`:
//!
//! 1. `h_M` shows no zero in the upper half-plane polydisc (sampling);
//! 2. `p = h_M(x + 1)` is real-rooted along seeded directions (exact);
//! 3. the degree rank table of `h_M` is a polymatroid equal to the matroid rank;
//! 4. `supp(h_M)` is a jump system with constant-sum maxima;
//! 5. Ingleton fails for that rank table;
//! 6. the rank table of `h_M^N` is `N r`, so the deficit becomes `N` times as large.
//!
//! A determinantal representation of `p^N` would make `N r` the rank
//! function of a subspace arrangement, which always satisfies Ingleton.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::jumpsys::{check_axiom_j, interval_property_check, maximal_constant_sum_check, ConstantSum};
use crate::matroid::Matroid;
use crate::polymat::{
    check_polymatroid, hyperbolic_rank_table, ingleton_check, ingleton_scan, standard_basis, IngletonQuadruple,
    IngletonReport, RankTable, ScanMode, FULL_SCAN_LIMIT,
};
use crate::realcheck::{negative_coefficients, ones, random_directions, rz_check, stability_sample};

pub const CONCLUSION: &str = "no determinantal representation of p^N for any N >= 1";
pub const NO_OBSTRUCTION: &str = "no obstruction found by Ingleton";

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineOptions {
    pub seed: u64,
    pub stability_samples: usize,
    pub rz_directions: usize,
    /// Powers `N = 1..=max_power` whose rank tables are recomputed from `h^N`.
    pub max_power: u32,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { seed: 42, stability_samples: 1000, rz_directions: 100, max_power: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageResult {
    pub stage: &'static str,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PipelineStatus {
    Obstruction,
    NoObstruction,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineVerdict {
    pub stages: Vec<StageResult>,
    /// Worst Ingleton violation found, if any.
    pub ingleton: Option<IngletonReport>,
    pub conclusion: String,
    pub status: PipelineStatus,
}

impl PipelineVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "stages": self.stages,
            "ingleton": self.ingleton.as_ref().map(IngletonReport::to_json),
            "conclusion": self.conclusion,
            "status": self.status,
        })
    }
}

pub fn counterexample(m: &Matroid, opts: &PipelineOptions) -> Result<PipelineVerdict> {
    let n = m.n();
    let h = m.bases_polynomial();
    let mut stages = Vec::with_capacity(6);

    let stab = stability_sample(&h.to_gauss(), opts.stability_samples, opts.seed);
    stages.push(StageResult { stage: "stability", passed: stab.is_stable_so_far(), detail: serde_json::to_value(&stab).expect("plain data") });

    let p = h.shift(&ones(n))?;
    let dirs = random_directions(n, opts.rz_directions, opts.seed);
    let verdicts = rz_check(&p, &dirs)?;
    let refuted: Vec<_> = verdicts.iter().filter(|v| !v.real_rooted).collect();
    let negative = negative_coefficients(&p);
    stages.push(StageResult {
        stage: "real_zero",
        passed: refuted.is_empty() && negative.is_empty(),
        detail: json!({
            "directions": verdicts.len(),
            "seed": opts.seed,
            "refuting_directions": refuted,
            "negative_coefficients": negative,
        }),
    });

    let r = RankTable::of_matroid(m);
    let rh = hyperbolic_rank_table(&h, &standard_basis(n), &ones(n))?;
    let violations = check_polymatroid(&rh);
    stages.push(StageResult {
        stage: "polymatroid",
        passed: violations.is_empty() && rh == r,
        detail: json!({ "violations": violations, "matches_matroid_rank": rh == r }),
    });

    let support = h.support();
    let axiom = check_axiom_j(&support);
    let sums = maximal_constant_sum_check(&support)?;
    let interval = interval_property_check(&p.support());
    let sums_ok = sums == ConstantSum::Constant(m.rank_of_matroid() as i64);
    stages.push(StageResult {
        stage: "jump_system",
        passed: axiom.is_empty() && sums_ok && interval.is_empty(),
        detail: json!({ "axiom_violations": axiom, "maximal_sum": sums, "interval_violations": interval }),
    });

    let reports = if *m == Matroid::vamos() {
        vec![ingleton_check(&r, IngletonQuadruple::vamos())?]
    } else {
        ingleton_scan(&r, ScanMode::DisjointPairs, FULL_SCAN_LIMIT)?
    };
    // first report with the largest deficit; scan output is already deterministic
    let worst = reports.iter().fold(None::<&IngletonReport>, |best, rep| match best {
        Some(b) if b.deficit >= rep.deficit => Some(b),
        _ => Some(rep),
    });
    let ingleton = worst.filter(|w| w.deficit > 0).cloned();
    stages.push(StageResult {
        stage: "ingleton",
        passed: true,
        detail: json!({
            "mode": if *m == Matroid::vamos() { ScanMode::PaperQuadruple } else { ScanMode::DisjointPairs },
            "violations": reports.iter().filter(|r| r.deficit > 0).count(),
            "worst": worst.map(IngletonReport::to_json),
        }),
    });

    if let Some(w) = &ingleton {
        let mut powers = Vec::new();
        let mut hn = h.clone();
        let mut ok = true;
        for power in 1..=opts.max_power {
            if power > 1 {
                hn = hn.checked_mul(&h)?;
            }
            let table = hyperbolic_rank_table(&hn, &standard_basis(n), &ones(n))?;
            let scaled = table == r.scale(power);
            let rep = ingleton_check(&table, w.quadruple)?;
            ok &= scaled && rep.deficit == power as i64 * w.deficit;
            powers.push(json!({ "n": power, "table_is_scaled": scaled, "deficit": rep.deficit }));
        }
        stages.push(StageResult {
            stage: "scaling",
            passed: ok,
            detail: json!({
                "checked_powers": powers,
                "statement": format!("the rank table of p^N is N r, with Ingleton deficit {}N for every N >= 1", w.deficit),
            }),
        });
    }

    let (conclusion, status) = match ingleton {
        Some(_) => (CONCLUSION.to_string(), PipelineStatus::Obstruction),
        None => (NO_OBSTRUCTION.to_string(), PipelineStatus::NoObstruction),
    };
    Ok(PipelineVerdict { stages, ingleton, conclusion, status })
}
