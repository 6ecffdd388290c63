use crate::coeff::CycloNumber;

use super::QSeries;

/// Dense series `Σ_{k<len} c_k q^{k/D}` starting at `q^0`, used where a
/// running product is updated one binomial factor at a time.
#[derive(Clone, Debug)]
pub(crate) struct DenseUnit {
    denom: i64,
    field_order: u32,
    coeffs: Vec<CycloNumber>,
}

impl DenseUnit {
    pub fn one(denom: i64, len: usize, field_order: u32) -> Self {
        let mut coeffs = vec![CycloNumber::zero(field_order); len.max(1)];
        coeffs[0] = CycloNumber::one(field_order);
        DenseUnit {
            denom,
            field_order,
            coeffs,
        }
    }

    fn lifted(&self, c: &CycloNumber) -> CycloNumber {
        if c.order() == self.field_order {
            c.clone()
        } else {
            c.lift_order(self.field_order)
                .expect("factor coefficient outside the working field")
        }
    }

    /// Multiply in place by `1 − c·q^{step/D}`, `step > 0`.
    pub fn mul_binomial(&mut self, c: &CycloNumber, step: i64) {
        debug_assert!(step > 0);
        let c = self.lifted(c);
        let step = step as usize;
        for k in (step..self.coeffs.len()).rev() {
            let prev = &self.coeffs[k - step];
            if !prev.is_zero() {
                let t = &c * prev;
                self.coeffs[k] = &self.coeffs[k] - &t;
            }
        }
    }

    /// Divide in place by `1 − c·q^{step/D}`, `step > 0`.
    pub fn div_binomial(&mut self, c: &CycloNumber, step: i64) {
        debug_assert!(step > 0);
        let c = self.lifted(c);
        let step = step as usize;
        for k in step..self.coeffs.len() {
            let prev = &self.coeffs[k - step];
            if !prev.is_zero() {
                let t = &c * prev;
                self.coeffs[k] = &self.coeffs[k] + &t;
            }
        }
    }

    /// `scale · q^{offset/D} · self`, keeping only the first `len` coefficients,
    /// as a series known to `q^{(offset+len)/D}`.
    pub fn to_series(&self, offset: i64, len: usize, scale: &CycloNumber) -> QSeries {
        let len = len.min(self.coeffs.len());
        QSeries::from_grid(
            self.denom,
            offset + len as i64,
            self.field_order,
            self.coeffs[..len]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (offset + k as i64, c * scale)),
        )
    }
}
