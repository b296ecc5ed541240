use std::fmt;

use anyhow::{anyhow, bail, Context, Result};
use baxter_core::floorplan::{pack, phi_f, psi_f, Floorplan, PackedFloorplan};
use baxter_core::nilp::{from_dyck_pair, phi_p, phi_p_inverse, to_dyck_pair, DyckPair, NilpTriple};
use baxter_core::perm::{in_b, phi, phi_inverse, Permutation};
use baxter_core::tlt::{is_baxter, TreeLikeTableau};
use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Tlt,
    BaxterTlt,
    Pfp,
    Floorplan,
    Perm,
    Nilp,
    DyckPair,
}

impl Class {
    pub fn name(self) -> &'static str {
        match self {
            Class::Tlt => "tlt",
            Class::BaxterTlt => "baxter-tlt",
            Class::Pfp => "pfp",
            Class::Floorplan => "floorplan",
            Class::Perm => "perm",
            Class::Nilp => "nilp",
            Class::DyckPair => "dyck-pair",
        }
    }

    fn from_name(s: &str) -> Result<Class> {
        Class::from_str(s, false).map_err(|_| anyhow!(InputError(format!("unknown class {s:?}"))))
    }
}

/// Bad arguments or payloads; the binary exits with code 2 on these.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(InputError(msg.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Tlt(TreeLikeTableau),
    BaxterTlt(TreeLikeTableau),
    Pfp(PackedFloorplan),
    Floorplan(Floorplan),
    Perm(Permutation),
    Nilp(NilpTriple),
    DyckPair(DyckPair),
}

fn decode<T: serde::de::DeserializeOwned>(class: Class, payload: Value) -> Result<T> {
    serde_json::from_value(payload).map_err(|e| input_error(format!("invalid {} payload: {e}", class.name())))
}

impl Object {
    pub fn class(&self) -> Class {
        match self {
            Object::Tlt(_) => Class::Tlt,
            Object::BaxterTlt(_) => Class::BaxterTlt,
            Object::Pfp(_) => Class::Pfp,
            Object::Floorplan(_) => Class::Floorplan,
            Object::Perm(_) => Class::Perm,
            Object::Nilp(_) => Class::Nilp,
            Object::DyckPair(_) => Class::DyckPair,
        }
    }

    pub fn from_payload(class: Class, payload: Value) -> Result<Object> {
        Ok(match class {
            Class::Tlt => Object::Tlt(decode(class, payload)?),
            Class::BaxterTlt => {
                let t: TreeLikeTableau = decode(class, payload)?;
                if !is_baxter(&t) {
                    return Err(input_error("payload is a tableau but not a Baxter one"));
                }
                Object::BaxterTlt(t)
            }
            Class::Pfp => Object::Pfp(decode(class, payload)?),
            Class::Floorplan => Object::Floorplan(decode(class, payload)?),
            Class::Perm => Object::Perm(match payload {
                Value::String(s) => s
                    .parse()
                    .map_err(|e| input_error(format!("invalid perm payload: {e}")))?,
                other => decode(class, other)?,
            }),
            Class::Nilp => Object::Nilp(decode(class, payload)?),
            Class::DyckPair => Object::DyckPair(decode(class, payload)?),
        })
    }

    /// Reads `{"class": …, "payload": …}`.
    pub fn from_envelope(text: &str) -> Result<Object> {
        let v: Value = serde_json::from_str(text).map_err(|e| input_error(format!("envelope is not JSON: {e}")))?;
        let class = v
            .get("class")
            .and_then(Value::as_str)
            .ok_or_else(|| input_error("envelope has no \"class\""))?;
        let payload = v
            .get("payload")
            .cloned()
            .ok_or_else(|| input_error("envelope has no \"payload\""))?;
        Object::from_payload(Class::from_name(class)?, payload)
    }

    pub fn payload(&self) -> Value {
        match self {
            Object::Tlt(t) | Object::BaxterTlt(t) => serde_json::to_value(t),
            Object::Pfp(f) => serde_json::to_value(f),
            Object::Floorplan(f) => serde_json::to_value(f),
            Object::Perm(s) => serde_json::to_value(s),
            Object::Nilp(p) => serde_json::to_value(p),
            Object::DyckPair(d) => serde_json::to_value(d),
        }
        .expect("payloads serialize")
    }

    pub fn envelope(&self) -> String {
        json!({ "class": self.class().name(), "payload": self.payload() }).to_string()
    }

    /// The Baxter tableau this object corresponds to.
    fn to_baxter_tlt(&self) -> Result<TreeLikeTableau> {
        let not_in_domain = |why: &str| input_error(format!("not in domain: {why}"));
        Ok(match self {
            Object::Tlt(t) | Object::BaxterTlt(t) => {
                if !is_baxter(t) {
                    return Err(not_in_domain("tableau is not Baxter"));
                }
                t.clone()
            }
            Object::Pfp(f) => psi_f(f),
            Object::Floorplan(f) => psi_f(&pack(f).context("packing failed")?),
            Object::Perm(s) => {
                if !in_b(s) {
                    return Err(not_in_domain(&format!("{s} contains 3-14-2 or 3-41-2")));
                }
                phi_inverse(s)
            }
            Object::Nilp(p) => phi_p_inverse(p),
            Object::DyckPair(d) => from_dyck_pair(d).map_err(|e| not_in_domain(&e.to_string()))?,
        })
    }

    /// Applies the composite bijection through the Baxter tableau.
    pub fn map_to(&self, to: Class) -> Result<Object> {
        if self.class() == to && to != Class::Tlt {
            return Ok(self.clone());
        }
        if to == Class::Tlt {
            return match self {
                Object::Tlt(t) => Ok(Object::Tlt(t.clone())),
                Object::Perm(s) => Ok(Object::Tlt(phi_inverse(s))),
                _ => Ok(Object::Tlt(self.to_baxter_tlt()?)),
            };
        }
        if let Object::Tlt(t) = self {
            if to == Class::Perm {
                return Ok(Object::Perm(phi(t)));
            }
        }
        let t = self.to_baxter_tlt()?;
        Ok(match to {
            Class::BaxterTlt => Object::BaxterTlt(t),
            Class::Pfp => Object::Pfp(phi_f(&t).expect("Baxter tableaux map to PFPs")),
            Class::Floorplan => Object::Floorplan(phi_f(&t).expect("Baxter tableaux map to PFPs").to_floorplan()),
            Class::Perm => Object::Perm(phi(&t)),
            Class::Nilp => Object::Nilp(phi_p(&t).expect("Baxter tableaux map to triples")),
            Class::DyckPair => {
                Object::DyckPair(to_dyck_pair(&t).map_err(|e| input_error(format!("not in domain: {e}")))?)
            }
            Class::Tlt => unreachable!(),
        })
    }
}

pub fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        bail!(InputError("size must be at least 1".into()));
    }
    Ok(())
}
