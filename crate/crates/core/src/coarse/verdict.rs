use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::group::{Element, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

/// Search limits shared by every semi-decidable check.
///
/// `radius` bounds word length of enumerated elements, `rounds` bounds
/// iterative procedures (saturation rounds, closure layers), `skip` is the
/// enumerated prefix treated as the bounded exceptional set, `witnesses` is
/// the number of independent violations needed to declare `Fails`, and `cap`
/// bounds the size of any materialized set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub radius: usize,
    pub rounds: usize,
    pub skip: usize,
    pub witnesses: usize,
    pub cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { radius: 8, rounds: 50, skip: 20, witnesses: 10, cap: 65536 }
    }
}

impl Budget {
    pub fn used(&self) -> BudgetUsed {
        BudgetUsed { radius: self.radius, skip: self.skip, witnesses: self.witnesses }
    }

    pub fn with_radius(mut self, radius: usize) -> Self {
        self.radius = radius;
        self
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds = rounds;
        self
    }

    pub fn with_skip(mut self, skip: usize) -> Self {
        self.skip = skip;
        self
    }

    pub fn with_witnesses(mut self, witnesses: usize) -> Self {
        self.witnesses = witnesses;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetUsed {
    pub radius: usize,
    pub skip: usize,
    pub witnesses: usize,
}

/// Three-valued answer of a budgeted check. `Fails` always carries finite,
/// re-checkable witnesses; `Unknown` records the exhausted budget.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub witnesses: Vec<Element>,
    pub certificate: Option<Value>,
    pub budget: BudgetUsed,
}

impl Verdict {
    pub fn holds(witnesses: Vec<Element>, budget: BudgetUsed) -> Self {
        Verdict { status: Status::Holds, witnesses, certificate: None, budget }
    }

    pub fn fails(witnesses: Vec<Element>, budget: BudgetUsed) -> Self {
        Verdict { status: Status::Fails, witnesses, certificate: None, budget }
    }

    pub fn unknown(witnesses: Vec<Element>, budget: BudgetUsed) -> Self {
        Verdict { status: Status::Unknown, witnesses, certificate: None, budget }
    }

    pub fn with_certificate(mut self, cert: Value) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }

    pub fn report(&self, property: &str, ctx: &dyn Group) -> VerdictReport {
        VerdictReport {
            property: property.to_string(),
            status: self.status,
            witnesses: self.witnesses.iter().map(|w| ctx.format(w)).collect(),
            budget: self.budget,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub property: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub budget: BudgetUsed,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::Heisenberg;

    #[test]
    fn report_shape() {
        let v = Verdict::fails(vec![Heisenberg::y()], Budget::default().used());
        let json = serde_json::to_value(v.report("is_discrete", &Heisenberg)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "property": "is_discrete",
                "status": "fails",
                "witnesses": ["(0;1;0)"],
                "budget": {"radius": 8, "skip": 20, "witnesses": 10}
            })
        );
    }
}
