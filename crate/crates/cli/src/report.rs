//! The JSON report and coefficient file formats.

use serde::{Deserialize, Serialize};
use tritrop_core::classcomplex::TritangentLocus;
use tritrop_core::curve33::{CoeffMatrix, CurveGamma};
use tritrop_core::lifting::LiftingReport;
use tritrop_core::plane::Vec2;
use tritrop_core::Rat;

use crate::error::CliError;

/// Version of both file formats.
pub const SCHEMA_VERSION: u32 = 1;

/// Formats a rational as `p/q`.
pub fn rat_str(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a rational written as `p/q`, `p` or a finite decimal.
pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    s.parse().map_err(|_| CliError::Input(format!("bad rational {s:?}")))
}

fn point_str(p: &Vec2) -> [String; 2] {
    [rat_str(&p[0]), rat_str(&p[1])]
}

/// A coefficient file: `A_ij` for `0 ≤ i, j ≤ 3`, row `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoeffFile {
    /// Format version.
    pub schema_version: u32,
    /// Coefficients as `p/q` strings.
    pub coefficients: [[String; 4]; 4],
}

impl CoeffFile {
    /// Encodes a matrix.
    pub fn from_matrix(a: &CoeffMatrix) -> CoeffFile {
        CoeffFile {
            schema_version: SCHEMA_VERSION,
            coefficients: core::array::from_fn(|i| core::array::from_fn(|j| rat_str(&a.a[i][j]))),
        }
    }

    /// Decodes the matrix.
    pub fn to_matrix(&self) -> Result<CoeffMatrix, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Input(format!("unsupported schemaVersion {}", self.schema_version)));
        }
        let mut out: [[Rat; 4]; 4] = Default::default();
        for (i, row) in self.coefficients.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                out[i][j] = parse_rat(s)?;
            }
        }
        Ok(CoeffMatrix { a: out })
    }
}

/// A leg of the (3,3)-curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LegJson {
    /// Index of the attaching vertex.
    pub endpoint: usize,
    /// Primitive direction.
    pub direction: [i64; 2],
}

/// The analyzed curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CurveJson {
    /// Coefficients actually analyzed, after any perturbation.
    pub coefficients: [[String; 4]; 4],
    /// Number of perturbation steps applied to the input.
    pub perturbation: u32,
    /// Vertices of the curve.
    pub vertices: Vec<[String; 2]>,
    /// Bounded edges as vertex index pairs.
    pub edges: Vec<[usize; 2]>,
    /// Legs.
    pub legs: Vec<LegJson>,
    /// Number of cells of the tritangent complex.
    pub cells: usize,
}

/// A member with positive lifting multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MemberJson {
    /// Lowest vertex.
    pub v0: [String; 2],
    /// Signed edge length.
    pub len: String,
    /// Top vertex.
    pub v1: [String; 2],
    /// Lifting multiplicity.
    pub multiplicity: u32,
    /// Tangency labels with flavors.
    pub labels: Vec<String>,
}

/// Projection of one cell of the bounded complex to the two vertex positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RegionJson {
    /// Dimension of the cell.
    pub dim: i8,
    /// Whether the cell is special.
    pub special: bool,
    /// Positions of `v0` at the vertices of the cell.
    pub v0: Vec<[String; 2]>,
    /// Positions of `v1` at the vertices of the cell.
    pub v1: Vec<[String; 2]>,
}

/// One tritangent class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassJson {
    /// Class id, starting at 1.
    pub id: usize,
    /// `(n1, n2, n4, n8)`, absent when it could not be computed.
    pub partition: Option<[u32; 4]>,
    /// Dimensions of the non-special bounded complex, the bounded complex
    /// and the class.
    pub dims: [i8; 3],
    /// Whether a (4b) tangency occurs in the non-special bounded complex.
    pub has_four_b: bool,
    /// Cell counts of the class, the bounded and the non-special complex.
    pub cell_counts: [usize; 3],
    /// Members with positive multiplicity.
    pub liftable_members: Vec<MemberJson>,
    /// Error raised while computing the partition.
    pub error: Option<String>,
    /// Cells of the bounded complex, projected.
    pub regions: Vec<RegionJson>,
}

/// Outcome of the consistency checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChecksJson {
    /// Exactly fifteen classes.
    pub class_count: bool,
    /// Weighted totals equal eight.
    pub totals: bool,
    /// Partitions among the six.
    pub partitions: bool,
    /// Dimension table with the (4b) condition.
    pub partition_dims: bool,
    /// Admissible dimension triples.
    pub dims: bool,
    /// Table keyed by the bounded dimension, checked where both dimensions
    /// agree.
    pub bounded_dims_conditional: bool,
    /// Symmetry invariance, when checked.
    pub d4: Option<bool>,
    /// All checks that ran passed.
    pub all_pass: bool,
}

impl ChecksJson {
    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.class_count, "classCount"),
            (self.totals, "totals"),
            (self.partitions, "partitions"),
            (self.partition_dims, "partitionDims"),
            (self.dims, "dims"),
            (self.bounded_dims_conditional, "boundedDimsConditional"),
            (self.d4.unwrap_or(true), "d4"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

/// The full report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    /// Format version.
    pub schema_version: u32,
    /// The curve.
    pub curve: CurveJson,
    /// The classes.
    pub classes: Vec<ClassJson>,
    /// Consistency checks.
    pub checks: ChecksJson,
}

impl ReportJson {
    /// Assembles the report.
    pub fn build(
        a: &CoeffMatrix,
        perturbation: u32,
        gamma: &CurveGamma,
        locus: &TritangentLocus,
        report: &LiftingReport,
        bounded: &[Vec<usize>],
    ) -> ReportJson {
        let curve = CurveJson {
            coefficients: CoeffFile::from_matrix(a).coefficients,
            perturbation,
            vertices: gamma.vertices.iter().map(|v| point_str(&v.point)).collect(),
            edges: gamma.edges.iter().map(|e| e.endpoints).collect(),
            legs: gamma.legs.iter().map(|l| LegJson { endpoint: l.endpoint, direction: l.direction }).collect(),
            cells: locus.cells.len(),
        };
        let classes = report
            .classes
            .iter()
            .zip(bounded)
            .map(|(c, b)| {
                let (partition, has_four_b, liftable_members, error) = match &c.lifting {
                    Ok(l) => (
                        Some(l.partition.0),
                        l.has4b,
                        l.liftable
                            .iter()
                            .map(|m| MemberJson {
                                v0: point_str(&m.curve.v0),
                                len: rat_str(&m.curve.len),
                                v1: point_str(&m.curve.v1()),
                                multiplicity: m.mult,
                                labels: m.labels(),
                            })
                            .collect(),
                        None,
                    ),
                    Err(e) => (None, false, Vec::new(), Some(e.to_string())),
                };
                let regions = b
                    .iter()
                    .map(|&i| {
                        let cell = &locus.cells[i];
                        let sign = cell.key.sign;
                        let mut v0 = Vec::new();
                        let mut v1 = Vec::new();
                        for x in &cell.poly.vertices {
                            let p = tritrop_core::curve11::Curve11Param::from_point(x);
                            let q = if sign < 0 {
                                [&p.v0[0] + &p.len, &p.v0[1] - &p.len]
                            } else {
                                [&p.v0[0] + &p.len, &p.v0[1] + &p.len]
                            };
                            v0.push(point_str(&p.v0));
                            v1.push(point_str(&q));
                        }
                        RegionJson { dim: cell.dim(), special: locus.special[i], v0, v1 }
                    })
                    .collect();
                ClassJson {
                    id: c.id,
                    partition,
                    dims: [c.dims.0, c.dims.1, c.dims.2],
                    has_four_b,
                    cell_counts: [c.cell_counts.0, c.cell_counts.1, c.cell_counts.2],
                    liftable_members,
                    error,
                    regions,
                }
            })
            .collect();
        let f = &report.flags;
        let checks = ChecksJson {
            class_count: f.class_count,
            totals: f.totals,
            partitions: f.partitions,
            partition_dims: f.partition_dims,
            dims: f.dims,
            bounded_dims_conditional: f.bounded_dims_conditional,
            d4: f.d4,
            all_pass: f.all_pass(),
        };
        ReportJson { schema_version: SCHEMA_VERSION, curve, classes, checks }
    }
}
