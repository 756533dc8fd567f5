use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::registry::{claim_info, ClaimId, ParamKind, Profile};

/// A complete, validated parameter set for one claim, in schema order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClaimParams {
    id: ClaimId,
    values: Vec<(&'static str, u64)>,
}

impl ClaimParams {
    pub fn defaults(id: ClaimId, profile: Profile) -> Self {
        let values = claim_info(id).defaults(profile).to_vec();
        ClaimParams { id, values }
    }

    /// Desk defaults overridden by `name=value` pairs. `n` is shorthand for
    /// `n_min = n_max = n`; flags take `true`/`false`/`1`/`0`.
    pub fn parse<S: AsRef<str>>(id: ClaimId, overrides: &[(S, S)]) -> Result<Self> {
        let mut p = ClaimParams::defaults(id, Profile::Desk);
        for (name, value) in overrides {
            let (name, value) = (name.as_ref().trim(), value.as_ref().trim());
            if name == "n" && p.has("n_min") && p.has("n_max") {
                p.set("n_min", value)?;
                p.set("n_max", value)?;
            } else {
                p.set(name, value)?;
            }
        }
        p.check()?;
        Ok(p)
    }

    /// Like [`ClaimParams::parse`] with numeric values.
    pub fn with(id: ClaimId, overrides: &[(&str, u64)]) -> Result<Self> {
        let pairs: Vec<(String, String)> = overrides.iter().map(|(n, v)| (n.to_string(), v.to_string())).collect();
        Self::parse(id, &pairs)
    }

    pub fn id(&self) -> ClaimId {
        self.id
    }

    fn has(&self, name: &str) -> bool {
        self.values.iter().any(|(n, _)| *n == name)
    }

    fn set(&mut self, name: &str, value: &str) -> Result<()> {
        let info = claim_info(self.id);
        let Some(spec) = info.params.iter().find(|s| s.name == name) else {
            let names: Vec<&str> = info.params.iter().map(|s| s.name).collect();
            return Err(Error::usage(format!(
                "{} has no parameter {name:?}; accepted: {}",
                self.id,
                names.join(", ")
            )));
        };
        let v = match spec.kind {
            ParamKind::Flag => match value {
                "true" | "1" => 1,
                "false" | "0" => 0,
                _ => return Err(Error::usage(format!("{name} expects true or false, got {value:?}"))),
            },
            ParamKind::Int { min, max } => {
                let v: u64 = value
                    .parse()
                    .map_err(|_| Error::usage(format!("{name} expects an integer, got {value:?}")))?;
                if v < min || v > max {
                    return Err(Error::usage(format!("{name} must lie in {min}..={max}, got {v}")));
                }
                v
            }
        };
        let slot = self.values.iter_mut().find(|(n, _)| *n == name).expect("schema and defaults agree");
        slot.1 = v;
        Ok(())
    }

    fn check(&self) -> Result<()> {
        if self.has("n_min") && self.get("n_min") > self.get("n_max") {
            return Err(Error::usage("n_min must not exceed n_max"));
        }
        if self.has("l") && self.get("h") < self.get("l") {
            return Err(Error::usage("h must be at least l"));
        }
        Ok(())
    }

    pub fn try_get(&self, name: &str) -> Option<u64> {
        self.values.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    /// Panics if `name` is not in the claim's schema.
    pub fn get(&self, name: &str) -> u64 {
        self.try_get(name).unwrap_or_else(|| panic!("{} has no parameter {name}", self.id))
    }

    pub fn flag(&self, name: &str) -> bool {
        self.get(name) != 0
    }

    /// `(name, value)` in schema order, flags rendered as `true`/`false`.
    pub fn render(&self) -> Vec<(String, String)> {
        let info = claim_info(self.id);
        self.values
            .iter()
            .zip(info.params)
            .map(|((n, v), spec)| {
                let text = match spec.kind {
                    ParamKind::Flag => (if *v != 0 { "true" } else { "false" }).to_string(),
                    ParamKind::Int { .. } => v.to_string(),
                };
                (n.to_string(), text)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_and_shorthand() {
        let p = ClaimParams::parse(ClaimId::THM3_XYZU, &[("n", "2"), ("max", "50")]).unwrap();
        assert_eq!((p.get("n_min"), p.get("n_max"), p.get("max")), (2, 2, 50));
        let p = ClaimParams::parse(ClaimId::COR_QUADRATIC, &[("exclude_n1_even", "true")]).unwrap();
        assert!(p.flag("exclude_n1_even"));
        assert_eq!(p.render()[2], ("exclude_n1_even".into(), "true".into()));
    }

    #[test]
    fn schema_violations() {
        let bad = |id, k: &str, v: &str| ClaimParams::parse(id, &[(k, v)]).unwrap_err().is_usage();
        assert!(bad(ClaimId::THM3_XYZU, "bogus", "1"));
        assert!(bad(ClaimId::THM3_XYZU, "max", "0"));
        assert!(bad(ClaimId::THM3_XYZU, "max", "ten"));
        assert!(bad(ClaimId::THM3_XYZU, "n_min", "9"));
        assert!(bad(ClaimId::EULER_EKL, "l", "3"));
        assert!(bad(ClaimId::COR_QUADRATIC, "exclude_n1_even", "maybe"));
    }
}
