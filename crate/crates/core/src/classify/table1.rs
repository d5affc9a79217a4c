use super::{classify, Membership, Tier, TierVerdict};
use crate::expr::parse;
use serde::Serialize;
use std::collections::BTreeMap;
use std::thread;

/// A row of the reference table: a displayed number and the method columns
/// it appears under. Each cell is `(expression, method, can construct)`.
pub struct Table1Entry {
    pub label: &'static str,
    pub cells: &'static [(&'static str, Tier, bool)],
}

use Tier::{Conic as CO, Linkage as LI, OrigamiNeusis as ON, RulerCompass as RC, TranscendentalCurve as TC};

pub static TABLE1: [Table1Entry; 14] = [
    Table1Entry { label: "√2", cells: &[("sqrt(2)", RC, true)] },
    Table1Entry { label: "1/3", cells: &[("1/3", RC, true)] },
    Table1Entry { label: "cos(2π/17)", cells: &[("cos2pi(1/17)", RC, true)] },
    Table1Entry { label: "∛2", cells: &[("root(3,2)", RC, false), ("root(3,2)", ON, true)] },
    Table1Entry {
        label: "cos(2π/9)",
        cells: &[("cos2pi(1/9)", RC, false), ("cos2pi(1/9)", ON, true)],
    },
    Table1Entry { label: "⁵√2", cells: &[("root(5,2)", ON, false), ("root(5,2)", LI, true)] },
    Table1Entry { label: "cos(2π/11)", cells: &[("cos2pi(1/11)", ON, false)] },
    Table1Entry { label: "⁴√3", cells: &[("root(4,3)", CO, true)] },
    Table1Entry { label: "cos(2π/15)", cells: &[("cos2pi(1/15)", CO, true)] },
    Table1Entry { label: "⁷√2", cells: &[("root(7,2)", CO, false)] },
    Table1Entry {
        label: "cos(2π/23)",
        cells: &[("cos2pi(1/23)", CO, false), ("cos2pi(1/23)", LI, true)],
    },
    Table1Entry {
        label: "π",
        cells: &[("pi", RC, false), ("pi", ON, false), ("pi", CO, false), ("pi", LI, false), ("pi", TC, true)],
    },
    Table1Entry {
        label: "e, ln(2), sin(1)",
        cells: &[
            ("e", LI, false),
            ("ln2", LI, false),
            ("e", TC, true),
            ("ln2", TC, true),
            ("sin1", TC, true),
        ],
    },
    Table1Entry { label: "Ω", cells: &[("omega", TC, false)] },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub entry: &'static str,
    pub expression: &'static str,
    pub method: Tier,
    pub expected: Membership,
    pub computed: Membership,
    pub agree: bool,
}

/// Classifies every table cell under membership semantics, in table order.
pub fn table1_matrix(cap: u64) -> Vec<Table1Cell> {
    let mut exprs: Vec<&'static str> = Vec::new();
    for entry in &TABLE1 {
        for (e, _, _) in entry.cells {
            if !exprs.contains(e) {
                exprs.push(e);
            }
        }
    }
    let verdicts: BTreeMap<&str, TierVerdict> = thread::scope(|s| {
        let handles: Vec<_> = exprs
            .iter()
            .map(|&src| {
                s.spawn(move || {
                    let e = parse(src).expect("table expression parses");
                    (src, classify(&e, cap).expect("table expression evaluates"))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("classifier thread")).collect()
    });
    let mut out = Vec::new();
    for entry in &TABLE1 {
        for &(src, method, can) in entry.cells {
            let expected = Membership::from_bool(can);
            let computed = verdicts[src].member(method);
            out.push(Table1Cell {
                entry: entry.label,
                expression: src,
                method,
                expected,
                computed,
                agree: expected == computed,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_expression_parses() {
        for entry in &TABLE1 {
            for (src, _, _) in entry.cells {
                parse(src).unwrap();
            }
        }
    }

    #[test]
    fn cell_count() {
        assert_eq!(TABLE1.iter().map(|e| e.cells.len()).sum::<usize>(), 26);
    }

    #[test]
    fn all_cells_agree() {
        let cells = table1_matrix(crate::tower::DEFAULT_CAP);
        let bad: Vec<_> = cells.iter().filter(|c| !c.agree).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
