//! Report schema shared by the text and JSON renderings. The text form is
//! produced from the same struct, so JSON carries everything text shows.

use serde::Serialize;

use projdiff_core::classify::Classification;
use projdiff_core::contact::{ContactOrder, FubiniReport};
use projdiff_core::jets::{Chart, FundForms};
use projdiff_core::lines::{CoskunCheck, SplittingType};
use projdiff_core::pencils::PencilClass;
use projdiff_core::scalar;
use projdiff_core::Scalar;

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub input: Option<String>,
    pub point: Option<Vec<String>>,
    pub chart: Option<ChartInfo>,
    pub forms: Option<FormsInfo>,
    pub fubini: Option<FubiniInfo>,
    pub pencil: Option<PencilInfo>,
    pub class: Option<ClassInfo>,
    pub witnesses: Option<Witnesses>,
    pub splitting: Option<SplittingInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contact: Option<ContactInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChartInfo {
    pub n: usize,
    pub c: usize,
    #[serde(rename = "K")]
    pub order: u32,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FormsInfo {
    #[serde(rename = "dimF2")]
    pub dim_f2: usize,
    #[serde(rename = "dimF3resid")]
    pub dim_f3_resid: Option<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FubiniInfo {
    pub holds: bool,
    pub residual: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct PencilInfo {
    pub tag: Option<String>,
    pub case: Option<String>,
    pub partition: Option<Vec<usize>>,
    pub degenerate_dual: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassInfo {
    pub tag: String,
    pub number: Option<u8>,
}

type Tensor = Vec<Vec<Vec<String>>>;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witnesses {
    pub rho: Option<Tensor>,
    pub sigma: Option<Tensor>,
    #[serde(rename = "ciPasses")]
    pub ci_passes: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SplittingInfo {
    pub degrees: Vec<i64>,
    pub sum_ok: bool,
    pub a1_negative: bool,
    pub covers_impossible: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ContactInfo {
    /// A number, or `"contained"` when the line lies on the variety.
    pub order: String,
    #[serde(rename = "maxK")]
    pub max_k: u32,
}

pub fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(scalar::to_fraction_string).collect()
}

fn tensor(t: &[Vec<Vec<Scalar>>]) -> Tensor {
    t.iter().map(|m| m.iter().map(|r| strings(r)).collect()).collect()
}

impl ChartInfo {
    pub fn of(chart: &Chart) -> Self {
        ChartInfo {
            n: chart.n(),
            c: chart.c(),
            order: chart.order(),
        }
    }
}

impl FormsInfo {
    pub fn of(ff: &FundForms, fubini: Option<&FubiniReport>) -> Self {
        FormsInfo {
            dim_f2: ff.space(2).dim(),
            dim_f3_resid: fubini.map(|f| f.residual),
        }
    }
}

impl FubiniInfo {
    pub fn of(f: &FubiniReport) -> Self {
        FubiniInfo {
            holds: f.holds,
            residual: f.residual,
        }
    }
}

impl PencilInfo {
    pub fn of(p: &PencilClass) -> Self {
        PencilInfo {
            tag: Some(p.tag.name().into()),
            case: p.tag.case().map(Into::into),
            partition: p.partition.clone(),
            degenerate_dual: Some(p.degenerate_dual),
        }
    }

    pub fn unrecognized() -> Self {
        PencilInfo {
            tag: None,
            case: None,
            partition: None,
            degenerate_dual: None,
        }
    }
}

impl SplittingInfo {
    pub fn of(st: &SplittingType, check: &CoskunCheck) -> Self {
        SplittingInfo {
            degrees: st.degrees.clone(),
            sum_ok: check.sum_ok,
            a1_negative: check.a1_negative,
            covers_impossible: check.covers_impossible,
        }
    }
}

impl ContactInfo {
    pub fn of(order: ContactOrder, max_k: u32) -> Self {
        ContactInfo {
            order: match order {
                ContactOrder::Finite(k) => k.to_string(),
                ContactOrder::Contained => "contained".into(),
            },
            max_k,
        }
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    /// Fills every section of an `analyze` report from a classification.
    pub fn with_classification(mut self, cls: &Classification) -> Self {
        self.point = Some(strings(cls.chart.base_point()));
        self.chart = Some(ChartInfo::of(&cls.chart));
        self.forms = Some(FormsInfo::of(&cls.forms, Some(&cls.fubini)));
        self.fubini = Some(FubiniInfo::of(&cls.fubini));
        self.pencil = Some(cls.pencil.as_ref().map_or_else(PencilInfo::unrecognized, PencilInfo::of));
        self.class = Some(ClassInfo {
            tag: cls.class.name().into(),
            number: cls.class.number(),
        });
        let (rho, sigma, passes) = match &cls.ci {
            Some(ci) => (ci.rho.as_deref().map(tensor), ci.sigma.as_deref().map(tensor), Some(ci.passes)),
            None => (cls.fubini.rho.as_deref().map(tensor), None, None),
        };
        self.witnesses = Some(Witnesses {
            rho,
            sigma,
            ci_passes: passes,
        });
        self.warnings.extend(cls.diagnostics.iter().cloned());
        self
    }

    pub fn with_fubini(mut self, ff: &FundForms, f: &FubiniReport) -> Self {
        self.forms = Some(FormsInfo::of(ff, Some(f)));
        self.fubini = Some(FubiniInfo::of(f));
        self.witnesses = Some(Witnesses {
            rho: f.rho.as_deref().map(tensor),
            sigma: None,
            ci_passes: None,
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(&value);
            out.push('\n');
        };
        line("command", self.command.clone());
        if let Some(input) = &self.input {
            line("input", input.clone());
        }
        if let Some(p) = &self.point {
            line("point", format!("[{}]", p.join(", ")));
        }
        if let Some(c) = &self.chart {
            line("chart", format!("n = {}, c = {}, K = {}", c.n, c.c, c.order));
        }
        if let Some(f) = &self.forms {
            let resid = f.dim_f3_resid.map_or("n/a".to_string(), |r| r.to_string());
            line("forms", format!("dim |F2| = {}, F3 residual = {}", f.dim_f2, resid));
        }
        if let Some(f) = &self.fubini {
            let verdict = if f.holds { "holds" } else { "fails" };
            line("fubini", format!("{} (residual {})", verdict, f.residual));
        }
        if let Some(p) = &self.pencil {
            let mut s = p.tag.clone().unwrap_or_else(|| "unrecognized".into());
            if let Some(case) = &p.case {
                s += &format!(" (case {})", case);
            }
            if let Some(parts) = &p.partition {
                s += &format!(", base locus {:?}", parts);
            }
            if let Some(d) = p.degenerate_dual {
                s += &format!(", degenerate dual {}", d);
            }
            line("pencil", s);
        }
        if let Some(c) = &self.class {
            let s = match c.number {
                Some(k) => format!("{} (class {})", c.tag, k),
                None => c.tag.clone(),
            };
            line("class", s);
        }
        if let Some(w) = &self.witnesses {
            if let Some(passes) = w.ci_passes {
                line("ci test", if passes { "passes".into() } else { "fails".into() });
            }
            if let Some(rho) = &w.rho {
                line("rho", render_tensor(rho));
            }
            if let Some(sigma) = &w.sigma {
                line("sigma", render_tensor(sigma));
            }
        }
        if let Some(s) = &self.splitting {
            let degs: Vec<String> = s.degrees.iter().map(i64::to_string).collect();
            line("splitting", format!("({})", degs.join(",")));
            line(
                "degree count",
                format!(
                    "sum ok {}, a1 negative {}, covering impossible {}",
                    s.sum_ok, s.a1_negative, s.covers_impossible
                ),
            );
        }
        if let Some(c) = &self.contact {
            line("contact order", format!("{} (checked up to {})", c.order, c.max_k));
        }
        if let Some(o) = &self.output {
            line("output", o.clone());
        }
        if let Some(e) = &self.error {
            line("error", e.clone());
        }
        for w in &self.warnings {
            line("warning", w.clone());
        }
        out
    }
}

fn render_tensor(t: &Tensor) -> String {
    let outer: Vec<String> = t
        .iter()
        .map(|m| {
            let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(" "))).collect();
            format!("[{}]", rows.join(" "))
        })
        .collect();
    outer.join(" ")
}
