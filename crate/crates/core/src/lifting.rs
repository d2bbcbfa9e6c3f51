//! Lifting multiplicities of tritangent members and lifting partitions of
//! tritangent classes.

use alloc::string::String;
use alloc::vec::Vec;

use crate::classcomplex::{analyze_classes, ClassError, TritangentClass, TritangentLocus, ADMISSIBLE_DIMS};
use crate::curve11::Curve11Param;
use crate::curve33::CurveGamma;
use crate::tangency::{classify_with, compute_mu, Catalog, Flavor, TangencyError, TangencyTuple, TangencyType};

/// Errors raised while computing lifting data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    /// A positive-dimensional cell has positive lifting multiplicity.
    #[error("non-generic: positive-dimensional liftable family (cell {0})")]
    PositiveDimensional(usize),
    /// The weighted count of a class is not eight.
    #[error("total ≠ 8 (class {class}, total {total})")]
    Total {
        /// Class id.
        class: usize,
        /// Weighted count found.
        total: u32,
    },
    /// A label has no entry in the lifting table.
    #[error("no lifting multiplicity for label {0}")]
    Unmapped(String),
    /// A member could not be classified.
    #[error(transparent)]
    Tangency(#[from] TangencyError),
    /// The class structure is inconsistent.
    #[error(transparent)]
    Class(#[from] ClassError),
}

/// A lifting multiplicity: 0, 1, 2, 4 or 8.
pub type LiftMult = u32;

/// Entry of the lifting table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableEntry {
    /// A fixed value.
    Value(LiftMult),
    /// The quantity `μ`.
    Mu,
}

/// Lifting table entry for a label and flavor.
pub fn table_entry(label: &str, flavor: Flavor) -> Option<TableEntry> {
    use TableEntry::*;
    let diag = flavor == Flavor::Diagonal;
    Some(match label {
        "(1a)" | "(1b)" | "(2b)" | "(3ab)" | "(3cb)" | "(3bb)" | "(3bb1)" | "(3bb2)" | "(4b)" | "(7)" | "(1')"
        | "(3a')" => Value(0),
        "(4a)" | "(6a)" if diag => Mu,
        "(2a)" | "(4a)" | "(5b)" | "(6a)" | "(6b)" | "(2a')" | "(4b')" | "(6b')" => Value(1),
        "(3a)" | "(3c)" | "(3aa)" | "(3ac)" | "(3cc)" | "(3d)" | "(3h)" | "(5a)" | "(3c')" => Value(2),
        "(3f)" => Value(4),
        "(8)" => Value(8),
        "(4a')" | "(6a')" => Mu,
        _ => return None,
    })
}

/// Local lifting multiplicity of component `idx` of a tuple.
pub fn local_mult(t: &TangencyType, context: &TangencyTuple, gamma: &CurveGamma, idx: usize) -> Result<LiftMult, LiftError> {
    match table_entry(t.label, t.flavor) {
        Some(TableEntry::Value(v)) => Ok(v),
        Some(TableEntry::Mu) => Ok(compute_mu(context, gamma, idx)? as LiftMult),
        None => Err(LiftError::Unmapped(String::from(t.label))),
    }
}

/// Lifting multiplicity of a tritangent: the product of the local values, or
/// zero for special members.
pub fn member_mult(t: &TangencyTuple, gamma: &CurveGamma, special: bool) -> Result<LiftMult, LiftError> {
    if special {
        return Ok(0);
    }
    let mut m = 1;
    for (i, (_, ty)) in t.components.iter().enumerate() {
        m *= local_mult(ty, t, gamma, i)?;
    }
    Ok(m)
}

/// Counts `(n1, n2, n4, n8)` of liftable members by multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftingPartition(pub [u32; 4]);

/// The six partitions that occur.
pub const PARTITIONS: [[u32; 4]; 6] =
    [[8, 0, 0, 0], [4, 2, 0, 0], [0, 2, 1, 0], [0, 4, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]];

impl LiftingPartition {
    /// `n1 + 2 n2 + 4 n4 + 8 n8`.
    pub fn total(&self) -> u32 {
        let [a, b, c, d] = self.0;
        a + 2 * b + 4 * c + 8 * d
    }

    /// Whether the partition is one of the six.
    pub fn is_admissible(&self) -> bool {
        PARTITIONS.contains(&self.0)
    }

    /// Adds a member of multiplicity `m`; zero is ignored.
    pub fn add(&mut self, m: LiftMult) {
        match m {
            1 => self.0[0] += 1,
            2 => self.0[1] += 1,
            4 => self.0[2] += 1,
            8 => self.0[3] += 1,
            _ => {}
        }
    }
}

impl core::fmt::Display for LiftingPartition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Partitions allowed for a dimension, split into the rows with and without a
/// (4b) member.
pub fn table_rows(dim: i8) -> (&'static [[u32; 4]], &'static [[u32; 4]]) {
    match dim {
        3 => (&[], &[[8, 0, 0, 0]]),
        2 => (&[[4, 2, 0, 0]], &[[0, 4, 0, 0]]),
        1 => (&[[0, 2, 1, 0]], &[[0, 0, 2, 0]]),
        0 => (&[], &[[0, 0, 0, 1]]),
        _ => (&[], &[]),
    }
}

/// Whether `(dim, partition, has4b)` matches the table rows.
pub fn table_matches(dim: i8, p: &LiftingPartition, has4b: bool) -> bool {
    let (with4b, without) = table_rows(dim);
    if with4b.contains(&p.0) {
        has4b
    } else if without.contains(&p.0) {
        !has4b || with4b.is_empty()
    } else {
        false
    }
}

/// Classified tangency data of one cell representative.
#[derive(Clone, Debug)]
pub struct MemberInfo {
    /// Cell index in the locus.
    pub cell: usize,
    /// The member.
    pub curve: Curve11Param,
    /// Type of each component.
    pub types: Vec<TangencyType>,
    /// Lifting multiplicity.
    pub mult: LiftMult,
}

impl MemberInfo {
    /// Labels with flavors, such as `(4a) diagonal`.
    pub fn labels(&self) -> Vec<String> {
        self.types
            .iter()
            .map(|t| match t.flavor {
                Flavor::None => String::from(t.label),
                f => alloc::format!("{} {}", t.label, f.name()),
            })
            .collect()
    }
}

/// Classifies the representative of a cell.
pub fn member_info(
    catalog: &Catalog,
    gamma: &CurveGamma,
    locus: &TritangentLocus,
    cell: usize,
) -> Result<MemberInfo, LiftError> {
    let c = &locus.cells[cell];
    let lambda = c.curve();
    let mut components = Vec::with_capacity(c.comps.len());
    for comp in &c.comps {
        let ty = classify_with(catalog, comp, &lambda, gamma)?;
        components.push((comp.clone(), ty));
    }
    let tuple = TangencyTuple { lambda: lambda.clone(), components };
    let mult = member_mult(&tuple, gamma, locus.special[cell])?;
    let types = tuple.components.into_iter().map(|(_, t)| t).collect();
    Ok(MemberInfo { cell, curve: lambda, types, mult })
}

/// Lifting data of a class.
#[derive(Clone, Debug)]
pub struct ClassLifting {
    /// The partition.
    pub partition: LiftingPartition,
    /// Members with positive multiplicity.
    pub liftable: Vec<MemberInfo>,
    /// Whether a representative of the non-special complex has a (4b) tangency.
    pub has4b: bool,
}

/// Lifting partition of a class, from the representatives of every cell of
/// its non-special bounded complex.
pub fn class_partition(
    catalog: &Catalog,
    gamma: &CurveGamma,
    locus: &TritangentLocus,
    class: &TritangentClass,
) -> Result<ClassLifting, LiftError> {
    let mut partition = LiftingPartition([0; 4]);
    let mut liftable = Vec::new();
    let mut has4b = false;
    for &cell in &class.nonspecial {
        let info = member_info(catalog, gamma, locus, cell)?;
        has4b |= info.types.iter().any(|t| t.label == "(4b)");
        if info.mult > 0 {
            if locus.cells[cell].dim() > 0 {
                return Err(LiftError::PositiveDimensional(cell));
            }
            partition.add(info.mult);
            liftable.push(info);
        }
    }
    let total = partition.total();
    if total != 8 {
        return Err(LiftError::Total { class: class.id, total });
    }
    Ok(ClassLifting { partition, liftable, has4b })
}

/// Report entry for one class.
#[derive(Clone, Debug)]
pub struct ClassReport {
    /// Class id.
    pub id: usize,
    /// `(dim Θᵇ_ns, dim Θᵇ, dim Θ)`.
    pub dims: (i8, i8, i8),
    /// Lifting data, or the error that prevented computing it.
    pub lifting: Result<ClassLifting, LiftError>,
    /// Number of cells of the class, its bounded and non-special complexes.
    pub cell_counts: (usize, usize, usize),
}

/// Outcome of each consistency check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConsistencyFlags {
    /// Exactly fifteen classes.
    pub class_count: bool,
    /// Every class has weighted total eight.
    pub totals: bool,
    /// Every partition is one of the six.
    pub partitions: bool,
    /// The dimension table with the (4b) condition matches every class.
    pub partition_dims: bool,
    /// Every dimension tuple is admissible.
    pub dims: bool,
    /// The table keyed by the bounded dimension matches every class where it
    /// applies.
    pub bounded_dims_conditional: bool,
    /// Partitions with dimensions are unchanged by the eight symmetries;
    /// `None` when not checked.
    pub d4: Option<bool>,
}

impl ConsistencyFlags {
    /// Whether every check that ran passed.
    pub fn all_pass(&self) -> bool {
        self.class_count
            && self.totals
            && self.partitions
            && self.partition_dims
            && self.dims
            && self.bounded_dims_conditional
            && self.d4.unwrap_or(true)
    }
}

/// Full report for a curve.
#[derive(Clone, Debug)]
pub struct LiftingReport {
    /// Per-class entries.
    pub classes: Vec<ClassReport>,
    /// Number of cells of the tritangent complex.
    pub cells: usize,
    /// Consistency flags.
    pub flags: ConsistencyFlags,
}

/// Sorted multiset of `(partition, dims)` pairs of a curve.
pub type Signature = Vec<([u32; 4], (i8, i8, i8))>;

impl LiftingReport {
    /// Sorted multiset of `(partition, dims)` over the classes with a
    /// partition.
    pub fn signature(&self) -> Signature {
        let mut v: Vec<_> = self
            .classes
            .iter()
            .filter_map(|c| c.lifting.as_ref().ok().map(|l| (l.partition.0, c.dims)))
            .collect();
        v.sort_unstable();
        v
    }

    /// Sum of the weighted totals over all classes.
    pub fn total_lifts(&self) -> u32 {
        self.classes.iter().filter_map(|c| c.lifting.as_ref().ok()).map(|l| l.partition.total()).sum()
    }
}

/// Builds the report for a computed locus.
pub fn report_for_locus(catalog: &Catalog, gamma: &CurveGamma, locus: &TritangentLocus) -> Result<LiftingReport, LiftError> {
    let classes = analyze_classes(locus)?;
    let mut out = Vec::with_capacity(classes.len());
    for c in &classes {
        let dims = c.dims(locus);
        out.push(ClassReport {
            id: c.id,
            dims,
            lifting: class_partition(catalog, gamma, locus, c),
            cell_counts: (c.cells.len(), c.bounded.len(), c.nonspecial.len()),
        });
    }
    let ok = |f: &dyn Fn(&ClassReport, &ClassLifting) -> bool| {
        out.iter().all(|c| c.lifting.as_ref().map(|l| f(c, l)).unwrap_or(false))
    };
    let flags = ConsistencyFlags {
        class_count: out.len() == 15,
        totals: ok(&|_, l| l.partition.total() == 8),
        partitions: ok(&|_, l| l.partition.is_admissible()),
        partition_dims: ok(&|c, l| table_matches(c.dims.0, &l.partition, l.has4b)),
        dims: out.iter().all(|c| ADMISSIBLE_DIMS.contains(&c.dims)),
        bounded_dims_conditional: ok(&|c, l| c.dims.0 != c.dims.1 || table_matches(c.dims.1, &l.partition, l.has4b)),
        d4: None,
    };
    Ok(LiftingReport { classes: out, cells: locus.cells.len(), flags })
}

/// Runs the pipeline on a curve and builds its report.
pub fn verify_report(gamma: &CurveGamma) -> Result<LiftingReport, LiftError> {
    let locus = TritangentLocus::build(gamma);
    report_for_locus(&Catalog::builtin(), gamma, &locus)
}
