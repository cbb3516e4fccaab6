use crate::exactpoly::Poly;

/// An identity reduced to a list of polynomials that must all vanish.
///
/// Verifiers build these; the suite decides how to test them (structural
/// zero test, or evaluation at random points).
#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub detail: Option<String>,
    pub residuals: Vec<(String, Poly)>,
}

impl Claim {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Claim {
            id: id.into(),
            anchor: anchor.into(),
            detail: None,
            residuals: Vec::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn push(&mut self, label: impl Into<String>, residual: Poly) {
        self.residuals.push((label.into(), residual));
    }

    /// Records `lhs - rhs` under `label`.
    pub fn expect_eq(&mut self, label: impl Into<String>, lhs: &Poly, rhs: &Poly) {
        self.push(label, lhs - rhs);
    }

    /// Records a failure that has no polynomial witness (e.g. a construction error).
    pub fn fail(id: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        let mut c = Claim::new(id, anchor).with_detail(reason);
        c.push("construction", Poly::one());
        c
    }

    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|(_, p)| p.is_zero())
    }

    /// Nonzero residuals, rendered as `label: poly` lines.
    pub fn witness(&self) -> Option<String> {
        let lines: Vec<String> = self
            .residuals
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(l, p)| format!("{l}: {p}"))
            .collect();
        (!lines.is_empty()).then(|| lines.join("\n"))
    }

    pub fn max_degree(&self) -> u32 {
        self.residuals
            .iter()
            .map(|(_, p)| p.total_degree())
            .max()
            .unwrap_or(0)
    }
}
