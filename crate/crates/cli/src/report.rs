use std::fmt::Write as _;

use rekolor_core::{Distance, RecolorSequence};
use serde::Serialize;

/// Summary of one `recolor` run. The JSON field names are stable.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub engine: &'static str,
    pub n: usize,
    pub m: usize,
    pub k: u32,
    pub tw: Option<usize>,
    pub grundy_number: Option<usize>,
    pub raw_length: Option<usize>,
    pub elided_length: Option<usize>,
    pub recolor_counts: Option<Vec<usize>>,
    pub max_recolor_count: Option<usize>,
    pub bound: Option<usize>,
    pub oracle_distance: Option<Distance>,
    pub seed: u64,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn record(&mut self, seq: &RecolorSequence) {
        self.raw_length = Some(seq.len());
        self.elided_length = Some(seq.loop_erased().len());
        self.recolor_counts = Some(seq.recolor_counts());
        self.max_recolor_count = Some(seq.max_recolor_count());
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            let _ = writeln!(out, "{key:<18} {value}");
        };
        line("engine", self.engine.to_string());
        line("vertices", self.n.to_string());
        line("edges", self.m.to_string());
        line("colors", self.k.to_string());
        if let Some(tw) = self.tw {
            line("treewidth", tw.to_string());
        }
        if let Some(g) = self.grundy_number {
            line("grundy number", g.to_string());
        }
        if let Some(len) = self.raw_length {
            line("raw length", len.to_string());
        }
        if let Some(len) = self.elided_length {
            line("elided length", len.to_string());
        }
        if let Some(max) = self.max_recolor_count {
            line("max recolorings", max.to_string());
        }
        if let Some(b) = self.bound {
            line("bound", b.to_string());
        }
        if let Some(d) = self.oracle_distance {
            line("oracle distance", d.to_string());
        }
        line("wall time ms", format!("{:.3}", self.wall_time_ms));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rekolor_core::{Coloring, RecolorStep};

    fn report() -> RunReport {
        RunReport {
            engine: "tw",
            n: 2,
            m: 1,
            k: 3,
            tw: Some(1),
            grundy_number: None,
            raw_length: None,
            elided_length: None,
            recolor_counts: None,
            max_recolor_count: None,
            bound: Some(12),
            oracle_distance: Some(Distance::Infinite),
            seed: 0,
            wall_time_ms: 1.0,
        }
    }

    #[test]
    fn json_keys_are_stable() {
        let mut r = report();
        let seq = RecolorSequence::new(
            Coloring::new(vec![1, 2], 3).unwrap(),
            vec![RecolorStep::new(0, 3), RecolorStep::new(0, 1)],
        );
        r.record(&seq);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["raw_length"], 2);
        assert_eq!(v["elided_length"], 0);
        assert_eq!(v["recolor_counts"], serde_json::json!([2, 0]));
        assert_eq!(v["oracle_distance"], "infinity");
        assert!(v["grundy_number"].is_null());
    }

    #[test]
    fn text_skips_missing_fields() {
        let text = report().to_text();
        assert!(text.contains("treewidth"));
        assert!(!text.contains("grundy"));
    }
}
