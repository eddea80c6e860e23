//! Output rendering. Every renderer is a pure function of its input, so
//! identical runs produce identical bytes.

use std::fmt::Write;

use serde::Serialize;
use sumbridge::bounds::{format_significant, write_crossover_csv, BoundReport, CrossoverRow};
use sumbridge::geometry::LatticeShellSummary;
use sumbridge::moments::MomentValue;
use sumbridge::sequence::{AuditStatus, BoundAudit, BoundForm, SearchOutcome, Verdict};
use sumbridge::{rational_string, VectorSequence};

use crate::Format;

fn sig(x: f64) -> String {
    format_significant(x, 9)
}

fn opt(x: Option<f64>, missing: &str) -> String {
    x.map_or_else(|| missing.to_string(), sig)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn bounds(reports: &[BoundReport<f64>], format: Format) -> String {
    match format {
        Format::Json => json(reports),
        Format::Csv => {
            let mut s = String::from("method,k,n,coefficient,asymptotic_bound,finite_bound\n");
            for r in reports {
                let n = r.n.map_or_else(String::new, |n| n.to_string());
                let _ = writeln!(
                    s,
                    "{},{},{n},{},{},{}",
                    r.method,
                    r.k,
                    sig(r.coefficient),
                    opt(r.asymptotic_bound, ""),
                    opt(r.finite_bound, "")
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(r) = reports.first() {
                let _ = writeln!(s, "lower bounds on M for n = {}, k = {}", r.n.unwrap_or(0), r.k);
            }
            let _ = writeln!(s, "{:<14} {:>14} {:>16} {:>16}", "method", "coefficient", "asymptotic", "finite");
            for r in reports {
                let _ = writeln!(
                    s,
                    "{:<14} {:>14} {:>16} {:>16}",
                    r.method.token(),
                    sig(r.coefficient),
                    opt(r.asymptotic_bound, "-"),
                    opt(r.finite_bound, "-")
                );
            }
            s
        }
    }
}

pub fn crossover(rows: &[CrossoverRow<f64>], format: Format) -> String {
    match format {
        Format::Json => json(rows),
        Format::Csv => {
            let mut buf = Vec::new();
            write_crossover_csv(rows, &mut buf).expect("writing to memory");
            String::from_utf8(buf).expect("ASCII output")
        }
        Format::Text => {
            let mut s = format!(
                "{:>4} {:>12} {:>12} {:>12}  {}\n",
                "k", "c_first", "c_third", "c_variance", "largest"
            );
            for r in rows {
                let note = if r.agrees_with_stated() {
                    String::new()
                } else {
                    format!("  (stated: {})", r.stated_branch())
                };
                let _ = writeln!(
                    s,
                    "{:>4} {:>12} {:>12} {:>12}  {}{note}",
                    r.k,
                    sig(r.c_first),
                    sig(r.c_third),
                    sig(r.c_variance),
                    r.argmax
                );
            }
            s
        }
    }
}

pub fn lattice(s: &LatticeShellSummary<f64>, format: Format) -> String {
    let ratio = opt(s.lemma_ratio, "undefined");
    match format {
        Format::Json => json(s),
        Format::Csv => format!(
            "n,k,p,points,discrete_sum,r_discrete,r_continuous,lemma_ratio,box_radius\n{},{},{},{},{},{},{},{ratio},{}\n",
            s.n,
            s.k,
            s.p,
            s.points,
            s.discrete_sum,
            sig(s.r_discrete),
            sig(s.r_continuous),
            s.box_radius
        ),
        Format::Text => format!(
            "n = {}, k = {}, p = {}\npoints        {}\ndiscrete_sum  {}\nr_discrete    {}\nr_continuous  {}\nlemma_ratio   {ratio}\nbox_radius    {}\n",
            s.n,
            s.k,
            s.p,
            s.points,
            s.discrete_sum,
            sig(s.r_discrete),
            sig(s.r_continuous),
            s.box_radius
        ),
    }
}

/// One side of a collision as a sequence of its own.
fn side(seq: &VectorSequence, indices: &[usize]) -> VectorSequence {
    let vectors = indices.iter().map(|&i| seq.vectors()[i].clone()).collect();
    VectorSequence::new(seq.k(), seq.bound(), vectors).expect("subsequence of a valid sequence")
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    n: usize,
    k: usize,
    bound: u64,
    #[serde(flatten)]
    verdict: &'a Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    sum: Option<Vec<u64>>,
}

pub fn verdict(seq: &VectorSequence, verdict: &Verdict, format: Format) -> String {
    let sum = match verdict {
        Verdict::Distinct => None,
        Verdict::Collision(c) => Some(seq.subset_sum(c.masks().0)),
    };
    match (format, verdict) {
        (Format::Json, _) => json(&VerifyJson {
            n: seq.n(),
            k: seq.k(),
            bound: seq.bound(),
            verdict,
            sum,
        }),
        (Format::Csv, Verdict::Distinct) => "verdict,left,right,sum\ndistinct,,,\n".into(),
        (Format::Csv, Verdict::Collision(c)) => format!(
            "verdict,left,right,sum\ncollision,{},{},{}\n",
            join(&c.left),
            join(&c.right),
            join(&sum.unwrap_or_default())
        ),
        (Format::Text, Verdict::Distinct) => format!("distinct: all {} subset sums differ\n", 1u128 << seq.n()),
        (Format::Text, Verdict::Collision(c)) => format!(
            "collision: both subsets sum to ({})\n# left, elements {} (0-based)\n{}# right, elements {} (0-based)\n{}",
            join(&sum.unwrap_or_default()),
            join(&c.left),
            side(seq, &c.left),
            join(&c.right),
            side(seq, &c.right)
        ),
    }
}

pub fn search(o: &SearchOutcome, format: Format) -> String {
    match format {
        Format::Json => json(o),
        Format::Csv => format!(
            "n,k,m_min,exhaustive,refuted_below,nodes\n{},{},{},{},{},{}\n",
            o.n, o.k, o.m_min, o.exhaustive, o.refuted_below, o.nodes
        ),
        Format::Text => {
            let head = if o.exhaustive {
                format!("# n = {}, k = {}: M_min = {} (exhaustive, {} nodes)", o.n, o.k, o.m_min, o.nodes)
            } else {
                format!(
                    "# n = {}, k = {}: M_min <= {} (incomplete: every M < {} refuted, {} nodes)",
                    o.n, o.k, o.m_min, o.refuted_below, o.nodes
                )
            };
            format!("{head}\n{}", o.witness)
        }
    }
}

pub fn moment(v: &MomentValue<f64>, format: Format) -> String {
    let value = v.exact().map(rational_string);
    let (p, stderr, samples, seed) = match v {
        MomentValue::ExactDp { p, .. } | MomentValue::ClosedForm { p, .. } => (p.to_string(), None, None, None),
        MomentValue::MonteCarlo { p, stderr, samples, seed, .. } => (p.to_string(), *stderr, Some(*samples), Some(*seed)),
    };
    match format {
        Format::Json => json(v),
        Format::Csv => format!(
            "provenance,p,value,approx,stderr,samples,seed\n{},{p},{},{},{},{},{}\n",
            v.provenance(),
            value.unwrap_or_default(),
            sig(v.approx()),
            opt(stderr, ""),
            samples.map_or_else(String::new, |s| s.to_string()),
            seed.map_or_else(String::new, |s| s.to_string())
        ),
        Format::Text => match value {
            Some(exact) => format!("E||X||_{p}^{p} = {exact} ~ {} ({})\n", sig(v.approx()), v.provenance()),
            None => format!(
                "E||X||_{p}^{p} ~ {} +/- {} ({}, {} samples, seed {})\n",
                sig(v.approx()),
                opt(stderr, "n/a"),
                v.provenance(),
                samples.unwrap_or(0),
                seed.unwrap_or(0)
            ),
        },
    }
}

fn form_token(f: BoundForm) -> &'static str {
    match f {
        BoundForm::Finite => "finite",
        BoundForm::Asymptotic => "asymptotic",
    }
}

fn status_token(s: AuditStatus) -> &'static str {
    match s {
        AuditStatus::Ok => "ok",
        AuditStatus::Informational => "informational",
        AuditStatus::Violation => "violation",
    }
}

pub fn audit(a: &BoundAudit, format: Format) -> String {
    match format {
        Format::Json => json(a),
        Format::Csv => {
            let mut s = String::from("method,form,lower_bound,m_min,baseline_m,status\n");
            for r in &a.rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.method,
                    form_token(r.form),
                    sig(r.lower_bound),
                    r.m_min,
                    r.baseline_m,
                    status_token(r.status)
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "n = {}, k = {}: M_min = {} ({}), baseline M = {}\n{:<14} {:<11} {:>14}  {}\n",
                a.n,
                a.k,
                a.m_min,
                if a.exhaustive { "exhaustive" } else { "upper bound only" },
                a.baseline_m,
                "method",
                "form",
                "lower_bound",
                "status"
            );
            for r in &a.rows {
                let _ = writeln!(
                    s,
                    "{:<14} {:<11} {:>14}  {}",
                    r.method.token(),
                    form_token(r.form),
                    sig(r.lower_bound),
                    status_token(r.status)
                );
            }
            s
        }
    }
}
