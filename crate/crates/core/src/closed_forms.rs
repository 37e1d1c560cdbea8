//! Reference closed-form expansions of the derived functions, entered as
//! polynomials in `s`.
//!
//! These tables are reference data for the verifiers. Nothing in the
//! construction path reads them.

use crate::arith::Rational;

/// `prefactor · m_{1^s}(s) · Σ coeffs_i(s) · basis_i(s)`.
#[derive(Clone, Copy)]
pub struct ClosedForm {
    pub name: &'static str,
    pub prefactor: (i64, i64),
    coeffs: fn(i64) -> [i64; 12],
    /// Some entries carry a `1/2` or `1/8`; the table stores `coeff·divisor`.
    divisors: [i64; 12],
}

impl ClosedForm {
    pub fn prefactor(&self) -> Rational {
        Rational::frac(self.prefactor.0, self.prefactor.1)
    }

    /// The twelve bracket coefficients at a given `s`.
    pub fn coeffs(&self, s: i64) -> [Rational; 12] {
        let raw = (self.coeffs)(s);
        std::array::from_fn(|i| Rational::frac(raw[i], self.divisors[i]))
    }
}

const ONES: [i64; 12] = [1; 12];

pub const F_2_0: ClosedForm = ClosedForm {
    name: "f_{s,2,0}",
    prefactor: (1, 360),
    coeffs: |s| {
        [
            66,
            225,
            320,
            600,
            1125,
            -75 * (3 * s + 4),
            -150 * (4 * s + 5),
            -225 * (5 * s + 6),
            10 * (30 * s * s + 73 * s + 35),
            75 * (15 * s * s + 35 * s + 14),
            -75 * s * (s + 1) * (5 * s + 12),
            s * (375 * s * s * s + 1650 * s * s + 1505 * s - 698),
        ]
    },
    divisors: [1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 8],
};

pub const F_3_0: ClosedForm = ClosedForm {
    name: "f_{s,3,0}",
    prefactor: (1, 1920),
    coeffs: |s| {
        [
            1683,
            6060,
            8770,
            16860,
            32400,
            -60 * (101 * s + 95),
            -60 * (281 * s + 255),
            -3600 * (9 * s + 8),
            10 * (843 * s * s + 1496 * s + 490),
            60 * (270 * s * s + 469 * s + 140),
            -60 * s * (90 * s * s + 229 * s + 125),
            s * (1350 * s * s * s + 4470 * s * s + 3305 * s - 698),
        ]
    },
    divisors: ONES,
};

pub const F_3_1: ClosedForm = ClosedForm {
    name: "f_{s,3,1}",
    prefactor: (1, 1920),
    coeffs: |s| {
        [
            1683,
            6060,
            8770,
            16860,
            32400,
            -60 * (101 * s + 133),
            -60 * (281 * s + 357),
            -720 * (45 * s + 56),
            10 * (843 * s * s + 2108 * s + 994),
            60 * (270 * s * s + 661 * s + 284),
            -60 * s * (90 * s * s + 325 * s + 263),
            s * (1350 * s * s * s + 6390 * s * s + 7265 * s - 1418),
        ]
    },
    divisors: ONES,
};

/// The quotients `p_{4,r,m}` in four variables, stated as integer vectors.
pub const P4_2_0: [i64; 12] = [66, 225, 320, 600, 1125, -1200, -3150, -5850, 8070, 14775, -24000, 27861];
pub const P4_3_0: [i64; 12] =
    [1683, 6060, 8770, 16860, 32400, -29940, -82740, -158400, 199620, 380160, -595440, 681768];
pub const P4_3_1: [i64; 12] =
    [1683, 6060, 8770, 16860, 32400, -32220, -88860, -169920, 229140, 434880, -720720, 865128];

pub const G4: ClosedForm = ClosedForm {
    name: "g_{4,s}",
    prefactor: (5, 1728),
    coeffs: |s| {
        [
            64,
            216,
            308,
            576,
            1080,
            -72 * (3 * s + 4),
            -144 * (4 * s + 5),
            -216 * (5 * s + 6),
            4 * (72 * s * s + 175 * s + 84),
            36 * (15 * s * s + 35 * s + 14),
            -36 * s * (s + 1) * (5 * s + 12),
            s * (3 * s - 1) * (3 * s + 7) * (5 * s + 12),
        ]
    },
    divisors: ONES,
};

pub const DELTA: ClosedForm = ClosedForm {
    name: "delta_s",
    prefactor: (1, 8),
    coeffs: |s| [0, 0, 0, 0, 0, 0, 0, 0, 7, 12, -12 * s, 6 * s * s - s],
    divisors: ONES,
};

pub const H: ClosedForm = ClosedForm {
    name: "h_s",
    prefactor: (1, 8),
    coeffs: |s| {
        [
            0,
            0,
            0,
            0,
            0,
            19,
            51,
            96,
            -(51 * s + 35),
            -12 * (8 * s + 5),
            3 * s * (16 * s + 19),
            -s * (16 * s * s + 27 * s - 5),
        ]
    },
    divisors: ONES,
};

pub const K: ClosedForm = ClosedForm {
    name: "k_s",
    prefactor: (5, 32),
    coeffs: |s| {
        [
            41,
            150,
            218,
            422,
            816,
            -2 * (75 * s + 76),
            -2 * (211 * s + 204),
            -48 * (17 * s + 16),
            211 * s * s + 401 * s + 140,
            2 * (204 * s * s + 377 * s + 120),
            -2 * s * (68 * s * s + 185 * s + 108),
            s * (s + 2) * (34 * s * s + 53 * s - 10),
        ]
    },
    divisors: ONES,
};

pub const C: ClosedForm = ClosedForm {
    name: "c_s",
    prefactor: (1, 64),
    coeffs: |s| {
        [
            265,
            924,
            1330,
            2524,
            4800,
            -4 * (231 * s + 190),
            -4 * (631 * s + 510),
            -960 * (5 * s + 4),
            2 * (631 * s * s + 986 * s + 280),
            4 * (600 * s * s + 929 * s + 240),
            -4 * s * (200 * s * s + 449 * s + 210),
            s * (200 * s * s * s + 578 * s * s + 363 * s - 80),
        ]
    },
    divisors: ONES,
};

pub const CHI_PRIME: ClosedForm = ClosedForm {
    name: "chi'_s",
    prefactor: (1, 768),
    coeffs: |s| {
        [
            675,
            2424,
            3510,
            6744,
            12960,
            -24 * (101 * s + 95),
            -24 * (281 * s + 255),
            -1440 * (9 * s + 8),
            2 * (1686 * s * s + 2991 * s + 980),
            24 * (270 * s * s + 469 * s + 140),
            -24 * s * (90 * s * s + 229 * s + 125),
            s * (540 * s * s * s + 1788 * s * s + 1323 * s - 280),
        ]
    },
    divisors: ONES,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_specializations_match_the_quotient_tables() {
        for (form, table) in [(F_2_0, P4_2_0), (F_3_0, P4_3_0), (F_3_1, P4_3_1)] {
            assert_eq!(form.coeffs(4), table.map(Rational::from), "{}", form.name);
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(F_3_0.coeffs(5)[5], Rational::from(-36000));
        assert_eq!(F_3_1.coeffs(6)[8], Rational::from(10 * (843 * 36 + 2108 * 6 + 994)));
        assert_eq!(F_3_1.coeffs(6)[8], Rational::from(439_900));
    }
}
