use serde::Serialize;

use crate::model::{ColorSet, ColorSetGraph, MetricColoring};

/// Outcome of an exhaustive check of a combinatorial statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub lemma: String,
    pub domain: String,
    /// Instances meeting the hypotheses that were examined.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl LemmaVerdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Combine per-shard verdicts: counts add up, the first counterexample wins.
    pub(crate) fn merge(lemma: &str, domain: String, shards: Vec<(u64, Option<Counterexample>)>) -> Self {
        let mut checked = 0;
        let mut counterexample = None;
        for (c, cx) in shards {
            checked += c;
            if counterexample.is_none() {
                counterexample = cx;
            }
        }
        LemmaVerdict {
            lemma: lemma.to_string(),
            domain,
            checked,
            counterexample,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    SubsetTriple {
        a: ColorSet,
        b: ColorSet,
        c: ColorSet,
    },
    RGraph {
        graph: ColorSetGraph,
        #[serde(
            serialize_with = "crate::one_based::opt_vertices",
            skip_serializing_if = "Option::is_none"
        )]
        labeling: Option<Vec<usize>>,
    },
    Amalgam {
        a: MetricColoring,
        b: MetricColoring,
        #[serde(serialize_with = "crate::one_based::pair_list")]
        shared: Vec<(usize, usize)>,
        result: MetricColoring,
    },
}
