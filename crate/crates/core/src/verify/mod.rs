//! Exhaustive, degree-bounded checks of the algebraic identities, each
//! producing a serialisable report.

mod counting;
mod forest_checks;
mod hopf_checks;
mod monomial_checks;

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::GradedBasis;
use crate::color::ColorSet;
use crate::forests::enumerate as fe;
use crate::forests::{AromaticForest, AromaticTree, ClumpedForest, MultiAroma};
use crate::multiindices::enumerate as me;
use crate::multiindices::{AromaticMI, AromaticMonomial, ClumpedMI};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub identity: String,
    pub statement: String,
    pub min_degree: usize,
    pub max_degree: usize,
    pub instances: u64,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

/// Accumulates instances and keeps the first counterexample.
#[derive(Default)]
pub(crate) struct Tally {
    instances: u64,
    failure: Option<Counterexample>,
}

impl Tally {
    pub(crate) fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub(crate) fn eq<T: PartialEq + Display>(
        &mut self,
        inputs: &[&dyn Display],
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.instances += 1;
        if lhs == rhs {
            return true;
        }
        if self.failure.is_none() {
            self.failure = Some(Counterexample {
                inputs: inputs.iter().map(|x| x.to_string()).collect(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        false
    }

    pub(crate) fn error(&mut self, inputs: &[&dyn Display], message: impl Display) {
        self.instances += 1;
        if self.failure.is_none() {
            self.failure = Some(Counterexample {
                inputs: inputs.iter().map(|x| x.to_string()).collect(),
                lhs: message.to_string(),
                rhs: String::new(),
            });
        }
    }
}

/// Shared, lazily enumerated degree slices.
pub struct Context {
    pub colors: ColorSet,
    pub aromatic_trees: GradedBasis<AromaticTree>,
    pub multiaromas: GradedBasis<MultiAroma>,
    pub forests: GradedBasis<AromaticForest>,
    pub clumped: GradedBasis<ClumpedForest>,
    pub monomials: GradedBasis<AromaticMonomial>,
    pub amis: GradedBasis<AromaticMI>,
    pub cmis: GradedBasis<ClumpedMI>,
}

impl Context {
    pub fn new(colors: ColorSet) -> Self {
        let c1 = colors.clone();
        let c2 = colors.clone();
        let c3 = colors.clone();
        let c4 = colors.clone();
        let c5 = colors.clone();
        let c6 = colors.clone();
        let c7 = colors.clone();
        Context {
            colors,
            aromatic_trees: GradedBasis::new(move |n| fe::aromatic_trees(n, &c1)),
            multiaromas: GradedBasis::new(move |n| fe::multiaromas(n, &c2)),
            forests: GradedBasis::new(move |n| fe::aromatic_forests(n, &c3)),
            clumped: GradedBasis::new(move |n| fe::clumped_forests(n, &c4)),
            monomials: GradedBasis::new(move |n| me::aromatic_monomials(n, &c5)),
            amis: GradedBasis::new(move |n| me::aromatic_mis(n, &c6)),
            cmis: GradedBasis::new(move |n| me::clumped_mis(n, &c7)),
        }
    }
}

impl Default for Context {
    fn default() -> Self {
        Context::new(ColorSet::default())
    }
}

type Runner = fn(&Context, usize, &mut Tally);

pub struct Check {
    pub name: &'static str,
    pub statement: &'static str,
    pub default_degree: usize,
    run: Runner,
}

macro_rules! check {
    ($name:literal, $deg:expr, $stmt:literal, $f:path) => {
        Check {
            name: $name,
            statement: $stmt,
            default_degree: $deg,
            run: $f,
        }
    };
}

/// Every registered check, in reporting order.
pub fn registry() -> Vec<Check> {
    vec![
        check!("pre_lie_forests", 3, "grafting on aromatic trees is pre-Lie", forest_checks::pre_lie),
        check!("rinehart_forests", 3, "Leibniz rule and Lie morphism for the anchor on aromatic trees", forest_checks::rinehart),
        check!("trace_div", 4, "divergence equals trace after adding a free edge", forest_checks::trace_div),
        check!("novikov_laws", 3, "pre-Lie identity on aromatic monomials and right-NAP identity on tree monomials", monomial_checks::novikov_laws),
        check!("rinehart_monomials", 3, "Leibniz rule and Lie morphism for the anchor on aromatic monomials", monomial_checks::rinehart),
        check!("transpose_partial", 5, "<d P, Q> = <P, dbar Q>", monomial_checks::transpose_partial),
        check!("transpose_delta", 5, "<delta x, y> = <x, deltabar y>", forest_checks::transpose_delta),
        check!("partialbar_closed_form", 5, "closed form of dbar^r (r <= 4) equals iterated dbar", monomial_checks::partialbar_closed_form),
        check!("delete_free_edges", 4, "deltabar^r removes r free edges with multinomial weight", counting::delete_free_edges),
        check!("full_trunk", 4, "deltabar^r of a full trunk is the multinomial times the trunk", counting::full_trunk),
        check!("grafting_count", 4, "number of graftings onto r free edges is the multinomial", counting::grafting_count),
        check!("graft_cut_count", 4, "|C(a,A,abar)| sigma(A) sigma(abar) = sigma(a) |G(a,A,abar)|", counting::graft_cut_count),
        check!("tuple_count", 4, "|B| = sigma_ext(M) / sigma_ext(F)", counting::tuple_count),
        check!("coassoc_bck_aro", 4, "aromatic BCK coproduct: coassociative, counital, multiplicative", hopf_checks::coassoc_bck_aro),
        check!("coassoc_bck_cl", 4, "clumped BCK coproduct: coassociative, counital, multiplicative", hopf_checks::coassoc_bck_cl),
        check!("coassoc_lot_aro", 4, "aromatic LOT coproduct: coassociative, counital, multiplicative", hopf_checks::coassoc_lot_aro),
        check!("coassoc_lot_cl", 4, "clumped LOT coproduct: coassociative, counital, multiplicative", hopf_checks::coassoc_lot_cl),
        check!("gl_duality", 4, "Grossman-Larson products are dual to the BCK coproducts, associative, and act compatibly", hopf_checks::gl_duality),
        check!("phi_morphism", 5, "Phi maps grafting to the Novikov product and the anchor to the anchor", monomial_checks::phi_morphism),
        check!("phi_delta", 4, "Phi(delta x) = d Phi(x) with free edges", monomial_checks::phi_delta),
        check!("jbar_partialbar", 4, "deltabar jbar = jbar dbar", monomial_checks::jbar_partialbar),
        check!("embedding_aro", 5, "(j (x) j) LOT_aro = BCK_aro j", hopf_checks::embedding_aro),
        check!("embedding_cl", 4, "(j (x) j) LOT_cl = BCK_cl j", hopf_checks::embedding_cl),
        check!("commuting_square", 4, "j_cl phi* = psi* j_aro; psi* and phi* are the adjoints of psi and phi", hopf_checks::commuting_square),
        check!("matching_cuts", 4, "each monomial cut matches the sum of the forest cuts over its preimages", counting::matching_cuts),
        check!("antipode_convolution", 4, "m(S (x) id) D = eps = m(id (x) S) D for all four coproducts", hopf_checks::antipode_convolution),
        check!("j_adjunction", 5, "<Phi(a), x^k> = <a, j(x^k)> with integral coefficients", monomial_checks::j_adjunction),
        check!("injectivity", 5, "j_aro has full rank on every degree slice", monomial_checks::injectivity),
    ]
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown check '{0}'")]
    UnknownCheck(String),
    #[error("degree bound must be at least 1")]
    Degree,
}

pub fn find(name: &str) -> Result<Check, VerifyError> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| VerifyError::UnknownCheck(name.to_string()))
}

impl Check {
    pub fn run(&self, ctx: &Context, maxdeg: usize) -> Report {
        let start = Instant::now();
        let mut tally = Tally::default();
        (self.run)(ctx, maxdeg, &mut tally);
        Report {
            identity: self.name.to_string(),
            statement: self.statement.to_string(),
            min_degree: 1,
            max_degree: maxdeg,
            instances: tally.instances,
            status: if tally.failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            counterexample: tally.failure,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

/// Runs one check by name at `maxdeg` (its default when `None`).
pub fn check(ctx: &Context, name: &str, maxdeg: Option<usize>) -> Result<Report, VerifyError> {
    let c = find(name)?;
    let d = maxdeg.unwrap_or(c.default_degree);
    if d == 0 {
        return Err(VerifyError::Degree);
    }
    Ok(c.run(ctx, d))
}

/// Runs every registered check, each at `maxdeg` or its own default.
pub fn run_all(ctx: &Context, maxdeg: Option<usize>) -> Vec<Report> {
    registry()
        .iter()
        .map(|c| c.run(ctx, maxdeg.unwrap_or(c.default_degree)))
        .collect()
}

/// <f x, y> = <x, g y> for x in `xs` and y in `ys`, checked on every such
/// pair where either side is nonzero. `ys` should contain the support of f
/// on `xs`; an image of f outside it shows up as a mismatch.
pub(crate) fn transpose_pairs<B: crate::algebra::Basis>(
    xs: &[B],
    ys: &[B],
    f: impl Fn(&B) -> crate::algebra::LinComb<B>,
    g: impl Fn(&B) -> crate::algebra::LinComb<B>,
    t: &mut Tally,
) {
    use crate::algebra::{from_big, Coeff};
    use std::collections::BTreeMap;
    let mut lhs: BTreeMap<(B, B), Coeff> = BTreeMap::new();
    for x in xs {
        for (y, c) in f(x).iter() {
            *lhs.entry((x.clone(), y.clone())).or_default() += c * from_big(&y.sigma());
        }
    }
    let mut rhs: BTreeMap<(B, B), Coeff> = BTreeMap::new();
    for y in ys {
        for (x, c) in g(y).iter() {
            if xs.binary_search(x).is_err() {
                continue;
            }
            *rhs.entry((x.clone(), y.clone())).or_default() += c * from_big(&x.sigma());
        }
    }
    let keys: std::collections::BTreeSet<&(B, B)> = lhs.keys().chain(rhs.keys()).collect();
    for k in keys {
        let l = lhs.get(k).cloned().unwrap_or_default();
        let r = rhs.get(k).cloned().unwrap_or_default();
        if !t.eq(&[&k.0, &k.1], &l, &r) {
            return;
        }
    }
}
