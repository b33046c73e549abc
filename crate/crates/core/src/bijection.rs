//! Weight-preserving bijections selectable by name.

use std::sync::LazyLock;

use crate::constraint::ConstraintSpec;
use crate::error::{invalid, Result};
use crate::glaisher::{
    f_to_r_traced, glaisher_merge_traced, glaisher_split_traced, phi_inverse_traced, phi_traced, r_to_f_traced,
    require, BijectionTrace,
};
use crate::partition::Partition;
use crate::registry::{Params, Registry};
use crate::symmetric::{sylvester_general, sylvester_general_inverse, SymmetricProfile};

pub trait Bijection: Send + Sync {
    fn name(&self) -> &'static str;

    fn domain(&self) -> ConstraintSpec;

    fn codomain(&self) -> ConstraintSpec;

    fn forward_traced(&self, lambda: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition>;

    fn inverse_traced(&self, mu: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition>;

    fn forward(&self, lambda: &Partition) -> Result<Partition> {
        self.forward_traced(lambda, None)
    }

    fn inverse(&self, mu: &Partition) -> Result<Partition> {
        self.inverse_traced(mu, None)
    }
}

/// k-regular partitions to partitions with every multiplicity below `k`.
struct Glaisher {
    k: u32,
}

impl Bijection for Glaisher {
    fn name(&self) -> &'static str {
        "glaisher"
    }
    fn domain(&self) -> ConstraintSpec {
        ConstraintSpec {
            regular_modulus: Some(self.k),
            ..ConstraintSpec::all()
        }
    }
    fn codomain(&self) -> ConstraintSpec {
        ConstraintSpec::r(self.k).expect("validated")
    }
    fn forward_traced(&self, lambda: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        require(self.domain(), lambda, "glaisher", &format!("{}-regular partitions", self.k))?;
        glaisher_merge_traced(lambda, self.k, trace)
    }
    fn inverse_traced(&self, mu: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        require(self.codomain(), mu, "glaisher inverse", &format!("R(n,{})", self.k))?;
        glaisher_split_traced(mu, self.k, trace)
    }
}

struct Phi {
    p: u32,
    k: u32,
}

impl Bijection for Phi {
    fn name(&self) -> &'static str {
        "phi"
    }
    fn domain(&self) -> ConstraintSpec {
        ConstraintSpec::b(self.p, self.k).expect("validated")
    }
    fn codomain(&self) -> ConstraintSpec {
        ConstraintSpec::c(self.k, self.p).expect("validated")
    }
    fn forward_traced(&self, lambda: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        phi_traced(lambda, self.p, self.k, trace)
    }
    fn inverse_traced(&self, mu: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        phi_inverse_traced(mu, self.p, self.k, trace)
    }
}

struct FToR {
    p: u32,
    t: u32,
}

impl Bijection for FToR {
    fn name(&self) -> &'static str {
        "f-to-r"
    }
    fn domain(&self) -> ConstraintSpec {
        ConstraintSpec::f(self.p, self.t).expect("validated")
    }
    fn codomain(&self) -> ConstraintSpec {
        ConstraintSpec::r(self.p).expect("validated")
    }
    fn forward_traced(&self, lambda: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        f_to_r_traced(lambda, self.p, self.t, trace)
    }
    fn inverse_traced(&self, mu: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        r_to_f_traced(mu, self.p, self.t, trace)
    }
}

/// Distinct parts `≡ 1+γ (mod μ)`, all at least `γ+1`, onto (μ,γ)-symmetric partitions.
struct Sylvester {
    profile: SymmetricProfile,
}

impl Bijection for Sylvester {
    fn name(&self) -> &'static str {
        "sylvester"
    }
    fn domain(&self) -> ConstraintSpec {
        ConstraintSpec::distinct_residue(self.profile)
    }
    fn codomain(&self) -> ConstraintSpec {
        ConstraintSpec::symmetric(self.profile)
    }
    fn forward_traced(&self, beta: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        let out = sylvester_general_inverse(beta, self.profile)?;
        if let Some(trace) = trace {
            trace.push("rebuild", beta.clone(), out.clone());
        }
        Ok(out)
    }
    fn inverse_traced(&self, lambda: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        let out = sylvester_general(lambda, self.profile)?;
        if let Some(trace) = trace {
            trace.push("collapse", lambda.clone(), out.clone());
        }
        Ok(out)
    }
}

struct Conjugate;

impl Bijection for Conjugate {
    fn name(&self) -> &'static str {
        "conjugate"
    }
    fn domain(&self) -> ConstraintSpec {
        ConstraintSpec::all()
    }
    fn codomain(&self) -> ConstraintSpec {
        ConstraintSpec::all()
    }
    fn forward_traced(&self, lambda: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        let out = lambda.conjugate();
        if let Some(trace) = trace {
            trace.push("conjugate", lambda.clone(), out.clone());
        }
        Ok(out)
    }
    fn inverse_traced(&self, mu: &Partition, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        self.forward_traced(mu, trace)
    }
}

fn at_least(name: &'static str, v: u32, min: u32) -> Result<u32> {
    if v < min {
        Err(invalid(name, format!("must be >= {min}, got {v}")))
    } else {
        Ok(v)
    }
}

pub static BIJECTIONS: LazyLock<Registry<dyn Bijection>> = LazyLock::new(|| {
    let mut reg: Registry<dyn Bijection> = Registry::new("bijection");
    reg.register("glaisher", "k-regular -> multiplicities below k by merging (--k)", |a| {
        Ok(Box::new(Glaisher {
            k: at_least("k", a.k()?, 2)?,
        }))
    })
    .register("phi", "B(n,p,k) -> C(n,k,p) (--p --k)", |a| {
        Ok(Box::new(Phi {
            p: at_least("p", a.p()?, 2)?,
            k: at_least("k", a.k()?, 2)?,
        }))
    })
    .register("f-to-r", "F(n,p,t) -> R(n,p) (--p --t)", |a| {
        Ok(Box::new(FToR {
            p: at_least("p", a.p()?, 2)?,
            t: at_least("t", a.t()?, 1)?,
        }))
    })
    .register(
        "sylvester",
        "distinct parts = 1+gamma mod mu -> (mu,gamma)-symmetric (--mu --gamma)",
        |a| {
            Ok(Box::new(Sylvester {
                profile: SymmetricProfile::new(a.mu()?, a.gamma()?)?,
            }))
        },
    )
    .register("conjugate", "transpose of the Young diagram", |_| Ok(Box::new(Conjugate)));
    reg
});

pub fn bijection(name: &str, params: &Params) -> Result<Box<dyn Bijection>> {
    BIJECTIONS.build(name, params)
}
