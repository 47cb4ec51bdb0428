//! Campaign reports in a human-readable and a tab-separated record format.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

/// One checked case: the instance, what was expected and what was observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub index: usize,
    pub digest: String,
    pub expected: String,
    pub observed: String,
    pub agree: bool,
}

impl CaseRecord {
    /// `agree` is `expected == observed`.
    pub fn compare(index: usize, digest: String, expected: String, observed: String) -> Self {
        let agree = expected == observed;
        CaseRecord { index, digest, expected, observed, agree }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    /// Aggregate facts computed by the campaign, printed in both formats.
    pub notes: Vec<(String, String)>,
    pub records: Vec<CaseRecord>,
    pub duration: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Records,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "records" => Ok(ReportFormat::Records),
            other => Err(format!("unknown format {other:?}; use text or records")),
        }
    }
}

/// Keeps record fields on one line and free of tabs.
fn field(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

impl CampaignReport {
    pub fn new(name: &str, params: Vec<(String, String)>) -> Self {
        CampaignReport {
            name: name.to_string(),
            params,
            notes: Vec::new(),
            records: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    pub fn case_count(&self) -> usize {
        self.records.len()
    }

    pub fn agree_count(&self) -> usize {
        self.records.iter().filter(|r| r.agree).count()
    }

    pub fn disagree_count(&self) -> usize {
        self.case_count() - self.agree_count()
    }

    pub fn all_agree(&self) -> bool {
        self.records.iter().all(|r| r.agree)
    }

    /// 0 when every case agrees, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.all_agree())
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.push((key.to_string(), value.to_string()));
    }

    fn param_line(&self) -> String {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(" ")
    }

    /// Tab-separated, one record per case. Excludes timing, so reruns with
    /// the same parameters are byte-identical.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "# campaign {}", self.name).unwrap();
        writeln!(w, "# params {}", self.param_line()).unwrap();
        for (k, v) in &self.notes {
            writeln!(w, "# note {k}={v}").unwrap();
        }
        writeln!(w, "index\tdigest\texpected\tobserved\tagree").unwrap();
        for r in &self.records {
            writeln!(
                w,
                "{}\t{}\t{}\t{}\t{}",
                r.index,
                field(&r.digest),
                field(&r.expected),
                field(&r.observed),
                u8::from(r.agree)
            )
            .unwrap();
        }
        writeln!(
            w,
            "# summary cases={} agree={} disagree={}",
            self.case_count(),
            self.agree_count(),
            self.disagree_count()
        )
        .unwrap();
        out
    }

    /// Summary, notes and every disagreement, followed by the wall-clock time.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "campaign {}", self.name).unwrap();
        writeln!(w, "params   {}", self.param_line()).unwrap();
        for (k, v) in &self.notes {
            writeln!(w, "note     {k} = {v}").unwrap();
        }
        writeln!(
            w,
            "cases    {} ({} agree, {} disagree)",
            self.case_count(),
            self.agree_count(),
            self.disagree_count()
        )
        .unwrap();
        for r in self.records.iter().filter(|r| !r.agree) {
            writeln!(w, "DISAGREE #{} {}: expected {}, observed {}", r.index, r.digest, r.expected, r.observed)
                .unwrap();
        }
        writeln!(w, "result   {}", if self.all_agree() { "PASS" } else { "FAIL" }).unwrap();
        writeln!(w, "time     {:.3}s", self.duration.as_secs_f64()).unwrap();
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Records => self.to_records(),
        }
    }
}
