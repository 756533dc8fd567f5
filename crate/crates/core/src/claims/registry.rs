use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

macro_rules! claim_ids {
    ($($id:ident),* $(,)?) => {
        /// Every registered statement, in catalog order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        #[allow(non_camel_case_types)]
        pub enum ClaimId {
            $($id),*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$id),*];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $(ClaimId::$id => stringify!($id)),*
                }
            }
        }
    };
}

claim_ids!(
    T1_FORWARD,
    T1_CONVERSE,
    COR1_CUBIC,
    EULER_EKL,
    WEAK_CONJ,
    ALT_CONJ,
    THM2_EQUIV,
    LEM0_PARITY,
    LEM1_PAIR_SYSTEM,
    THM3_XYZU,
    COR_QUADRATIC,
    THM4_SYS3,
    FLT_PRODUCT_FORM,
    PRODUCT_QUARTIC,
    PRODUCT_SQUARES_Z,
    PRODUCT_SQUARES_ZI,
    EULER_PRODUCT,
    EULER_1769,
    CONCL_XYZU_PAIRWISE,
);

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(alloc::format!("unknown claim id {s:?}")))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for ClaimId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = <alloc::string::String as serde::Deserialize>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// Inclusive range of accepted values.
    Int { min: u64, max: u64 },
    Flag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub help: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    Smoke,
    Desk,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smoke" => Ok(Profile::Smoke),
            "desk" => Ok(Profile::Desk),
            _ => Err(Error::usage(alloc::format!("unknown profile {s:?} (expected smoke or desk)"))),
        }
    }
}

/// Catalog entry: the statement under test, its parameters and the fixed
/// default parameters of each profile.
#[derive(Debug, Clone, Copy)]
pub struct ClaimInfo {
    pub id: ClaimId,
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    pub smoke: &'static [(&'static str, u64)],
    pub desk: &'static [(&'static str, u64)],
}

impl ClaimInfo {
    pub fn defaults(&self, profile: Profile) -> &'static [(&'static str, u64)] {
        match profile {
            Profile::Smoke => self.smoke,
            Profile::Desk => self.desk,
        }
    }
}

const fn int(name: &'static str, min: u64, max: u64, help: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Int { min, max }, help }
}

const N_MIN: ParamSpec = int("n_min", 1, 64, "smallest exponent n");
const N_MAX: ParamSpec = int("n_max", 1, 64, "largest exponent n");
const A_MAX: ParamSpec = int("a_max", 1, 100_000, "a ranges over 1..=a_max");
const B_MAX: ParamSpec = int("b_max", 1, 1_000_000, "b ranges over nonzero |b| <= b_max");
const MAX: ParamSpec = int("max", 1, 1_000_000, "inclusive bound on every enumerated variable");
const H: ParamSpec = int("h", 1, 8, "number of left-hand terms");
const L: ParamSpec = int("l", 1, 8, "number of right-hand terms");
const K: ParamSpec = int("k", 1, 64, "common exponent k");

const CUBIC: &[ParamSpec] = &[A_MAX, B_MAX, N_MIN, N_MAX];
const EQUAL_SUMS: &[ParamSpec] = &[H, L, K, MAX];
const ONE_SIDED: &[ParamSpec] = &[H, K, MAX];
const EXPONENT_RANGE: &[ParamSpec] = &[N_MIN, N_MAX, MAX];

static CATALOG: [ClaimInfo; 19] = [
    ClaimInfo {
        id: ClaimId::T1_FORWARD,
        statement: "For coprime a > 0, b != 0: if x^3 + b x + a^n splits over Q, then a = pqr for some pairwise coprime positive solution (p, q, r) of X^n + Y^n = Z^n.",
        params: CUBIC,
        smoke: &[("a_max", 20), ("b_max", 100), ("n_min", 1), ("n_max", 3)],
        desk: &[("a_max", 60), ("b_max", 500), ("n_min", 1), ("n_max", 3)],
    },
    ClaimInfo {
        id: ClaimId::T1_CONVERSE,
        statement: "Every pairwise coprime positive solution (p, q, r) of X^n + Y^n = Z^n yields x^3 + b x + a^n with a = pqr, b != 0 and gcd(a, b) = 1 that splits over Q.",
        params: &[MAX, N_MIN, N_MAX],
        smoke: &[("max", 30), ("n_min", 1), ("n_max", 2)],
        desk: &[("max", 200), ("n_min", 1), ("n_max", 3)],
    },
    ClaimInfo {
        id: ClaimId::COR1_CUBIC,
        statement: "For coprime a, b with ab != 0 and n >= 3, x^3 + b x + a^n is irreducible over Q or a linear factor times an irreducible quadratic.",
        params: CUBIC,
        smoke: &[("a_max", 10), ("b_max", 50), ("n_min", 3), ("n_max", 5)],
        desk: &[("a_max", 30), ("b_max", 200), ("n_min", 3), ("n_max", 5)],
    },
    ClaimInfo {
        id: ClaimId::EULER_EKL,
        statement: "x_1^k + ... + x_h^k - y_1^k - ... - y_l^k = 0 has no solution in positive integers when k > h + l.",
        params: EQUAL_SUMS,
        smoke: &[("h", 2), ("l", 1), ("k", 4), ("max", 100)],
        desk: &[("h", 2), ("l", 2), ("k", 5), ("max", 150)],
    },
    ClaimInfo {
        id: ClaimId::WEAK_CONJ,
        statement: "x_1^k + ... + x_h^k - y_1^k - ... - y_l^k = 0 with all h + l terms pairwise coprime has no solution in positive integers when k > h + l.",
        params: EQUAL_SUMS,
        smoke: &[("h", 2), ("l", 2), ("k", 5), ("max", 50)],
        desk: &[("h", 3), ("l", 2), ("k", 6), ("max", 60)],
    },
    ClaimInfo {
        id: ClaimId::ALT_CONJ,
        statement: "x_1^k + ... + x_h^k = y^k with x_1, ..., x_h, y pairwise coprime has no solution in positive integers when k > h >= 2.",
        params: ONE_SIDED,
        smoke: &[("h", 4), ("k", 5), ("max", 150)],
        desk: &[("h", 4), ("k", 5), ("max", 250)],
    },
    ClaimInfo {
        id: ClaimId::THM2_EQUIV,
        statement: "A pairwise coprime positive solution of x_1^k + ... + x_h^k = y_1^k + ... + y_l^k exists iff some x^n + a_{n-2} x^{n-2} + ... + a_1 x +- c^k with n = h + l, c > 0, a_1 a_0 != 0 and gcd(a_1, a_0) = 1 splits over Q.",
        params: EQUAL_SUMS,
        smoke: &[("h", 2), ("l", 1), ("k", 2), ("max", 50)],
        desk: &[("h", 3), ("l", 1), ("k", 3), ("max", 60)],
    },
    ClaimInfo {
        id: ClaimId::LEM0_PARITY,
        statement: "If X^n + Y^n = X'^n - Y'^n, XY = X'Y' with gcd(X, Y) = gcd(X', Y') = 1 has a positive solution, then XY is even.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 1), ("n_max", 3), ("max", 30)],
        desk: &[("n_min", 1), ("n_max", 3), ("max", 50)],
    },
    ClaimInfo {
        id: ClaimId::LEM1_PAIR_SYSTEM,
        statement: "X^n + Y^n = X'^n - Y'^n, XY = X'Y' with gcd(X, Y) = gcd(X', Y') = 1 has no positive solution when n >= 2.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 2), ("n_max", 3), ("max", 30)],
        desk: &[("n_min", 2), ("n_max", 3), ("max", 50)],
    },
    ClaimInfo {
        id: ClaimId::THM3_XYZU,
        statement: "x^n + y^n + z^n = u^n with xy = zu and gcd(x, y) = gcd(z, u) = 1 has no positive solution when n >= 2.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 2), ("n_max", 3), ("max", 30)],
        desk: &[("n_min", 2), ("n_max", 3), ("max", 50)],
    },
    ClaimInfo {
        id: ClaimId::COR_QUADRATIC,
        statement: "For coprime positive a, b and c = ab, x^2 + (a^n + b^n) x - c^n is irreducible over Q for all n >= 1 when ab is odd, and for n >= 2 when ab is even.",
        params: &[
            int("a_max", 2, 100_000, "a < b range over 1..=a_max"),
            int("n_max", 1, 64, "n ranges over 1..=n_max"),
            ParamSpec {
                name: "exclude_n1_even",
                kind: ParamKind::Flag,
                help: "skip n = 1 with ab even, where reducible cases are allowed",
            },
        ],
        smoke: &[("a_max", 20), ("n_max", 6), ("exclude_n1_even", 0)],
        desk: &[("a_max", 40), ("n_max", 8), ("exclude_n1_even", 0)],
    },
    ClaimInfo {
        id: ClaimId::THM4_SYS3,
        statement: "x_1^3 + x_2^3 + x_3^3 + 3 x_4^n = 0, (x_1 + x_2 + x_3) x_4 = 0 with x_1, x_2, x_3 pairwise coprime and x_1 x_2 x_3 != 0 has no integer solution when n > 2.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 3), ("n_max", 4), ("max", 15)],
        desk: &[("n_min", 3), ("n_max", 4), ("max", 30)],
    },
    ClaimInfo {
        id: ClaimId::FLT_PRODUCT_FORM,
        statement: "x_1 x_2 (x_1 + x_2) = x_3^n with coprime positive x_1, x_2 has no solution when n > 2.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 3), ("n_max", 3), ("max", 100)],
        desk: &[("n_min", 3), ("n_max", 3), ("max", 200)],
    },
    ClaimInfo {
        id: ClaimId::PRODUCT_QUARTIC,
        statement: "x_1 x_2 (x_1 + x_2) = x_3^4 with coprime x_1, x_2 has no solution.",
        params: &[MAX],
        smoke: &[("max", 100)],
        desk: &[("max", 200)],
    },
    ClaimInfo {
        id: ClaimId::PRODUCT_SQUARES_Z,
        statement: "x_1 x_2 (x_1^2 + x_2^2) = x_3^2 with coprime nonzero x_1, x_2 has no solution over Z.",
        params: &[MAX],
        smoke: &[("max", 100)],
        desk: &[("max", 300)],
    },
    ClaimInfo {
        id: ClaimId::PRODUCT_SQUARES_ZI,
        statement: "x_1 x_2 (x_1^2 + x_2^2) = x_3^2 with coprime x_1, x_2 and x_3 != 0 has no solution over Z[i].",
        params: &[int("norm_max", 1, 100_000, "bound on the norms of x_1 and x_2")],
        smoke: &[("norm_max", 20)],
        desk: &[("norm_max", 50)],
    },
    ClaimInfo {
        id: ClaimId::EULER_PRODUCT,
        statement: "x_1 x_2 x_3 (x_1 + x_2 + x_3) = x_4^n with x_1, x_2, x_3, x_1 + x_2 + x_3 pairwise coprime has no positive solution when n > 3.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 4), ("n_max", 4), ("max", 30)],
        desk: &[("n_min", 4), ("n_max", 4), ("max", 60)],
    },
    ClaimInfo {
        id: ClaimId::EULER_1769,
        statement: "x_1^k + ... + x_h^k = y^k has no solution in positive integers when k > h >= 2 (false in general; see h = 3, k = 4 and h = 4, k = 5).",
        params: ONE_SIDED,
        smoke: &[("h", 3), ("k", 4), ("max", 100)],
        desk: &[("h", 3), ("k", 4), ("max", 1000)],
    },
    ClaimInfo {
        id: ClaimId::CONCL_XYZU_PAIRWISE,
        statement: "x^n + y^n + z^n = u^n with x, y, z, u pairwise coprime has no positive solution when n >= 3.",
        params: EXPONENT_RANGE,
        smoke: &[("n_min", 3), ("n_max", 4), ("max", 30)],
        desk: &[("n_min", 3), ("n_max", 4), ("max", 60)],
    },
];

pub fn list_claims() -> &'static [ClaimInfo] {
    &CATALOG
}

pub fn claim_info(id: ClaimId) -> &'static ClaimInfo {
    &CATALOG[id as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_ordered_and_complete() {
        assert_eq!(list_claims().len(), 19);
        assert_eq!(list_claims()[0].id, ClaimId::T1_FORWARD);
        for (i, info) in list_claims().iter().enumerate() {
            assert_eq!(info.id as usize, i);
            assert_eq!(info.id, ClaimId::ALL[i]);
            for profile in [Profile::Smoke, Profile::Desk] {
                let names: alloc::vec::Vec<_> = info.defaults(profile).iter().map(|(n, _)| *n).collect();
                let schema: alloc::vec::Vec<_> = info.params.iter().map(|p| p.name).collect();
                assert_eq!(names, schema, "{}", info.id);
            }
        }
    }

    #[test]
    fn statements() {
        assert!(claim_info(ClaimId::EULER_EKL).statement.contains("has no solution in positive integers when k > h + l"));
        assert!(claim_info(ClaimId::THM3_XYZU).statement.contains("with xy = zu"));
    }

    #[test]
    fn ids_roundtrip() {
        for id in ClaimId::ALL {
            assert_eq!(id.as_str().parse::<ClaimId>().unwrap(), *id);
        }
        assert!("NOPE".parse::<ClaimId>().unwrap_err().is_usage());
    }
}
