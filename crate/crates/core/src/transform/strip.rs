use crate::{c64, Error, Result, C64};

/// A point of the strip `0 ≤ Re s ≤ 1`.
///
/// The spectrum is the strip modulo `s ↦ 1 − s`; [`StripPoint::canonical`]
/// picks the representative with `Re s ≤ ½`, and `Im s ≥ 0` on the
/// critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripPoint(C64);

impl StripPoint {
    pub fn new(s: C64) -> Result<Self> {
        if !(s.re >= 0.0 && s.re <= 1.0) || !s.im.is_finite() {
            return Err(Error::domain(
                "StripPoint",
                format!("{s} is outside 0 ≤ Re s ≤ 1"),
            ));
        }
        Ok(StripPoint(s))
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(c64(x, 0.0))
    }

    pub fn value(self) -> C64 {
        self.0
    }

    /// `s(1 − s)`, invariant under the involution.
    pub fn eigenvalue(self) -> C64 {
        self.0 * (1.0 - self.0)
    }

    pub fn involution(self) -> Self {
        StripPoint(1.0 - self.0)
    }

    pub fn conj(self) -> Self {
        StripPoint(self.0.conj())
    }

    pub fn canonical(self) -> Self {
        let s = self.0;
        if s.re > 0.5 || (s.re == 0.5 && s.im < 0.0) {
            StripPoint(1.0 - s)
        } else {
            self
        }
    }

    /// Strict interior `0 < Re s < 1`.
    pub fn is_interior(self) -> bool {
        self.0.re > 0.0 && self.0.re < 1.0
    }
}

/// The resolvent parameter `λ ∈ ℂ`, unrestricted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParameter(C64);

impl SpectralParameter {
    pub fn new(lambda: C64) -> Self {
        SpectralParameter(lambda)
    }

    pub fn value(self) -> C64 {
        self.0
    }

    /// Closed strip membership `0 ≤ Re λ ≤ 1`.
    pub fn in_strip(self) -> bool {
        self.0.re >= 0.0 && self.0.re <= 1.0
    }

    /// `e(λ) = λ(1 − λ)`.
    pub fn eigenvalue(self) -> C64 {
        self.0 * (1.0 - self.0)
    }

    pub fn reflected(self) -> Self {
        SpectralParameter(1.0 - self.0)
    }

    /// The strip point `λ`, if `λ` lies in the closed strip.
    pub fn as_strip_point(self) -> Result<StripPoint> {
        StripPoint::new(self.0)
    }
}
