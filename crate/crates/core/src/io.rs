//! File formats: density-matrix JSON, grid CSV/JSON, generator and
//! structure-constant dumps.
//!
//! Floats are printed with Rust's shortest round-trip formatting (up to 17
//! significant digits), decimal point `.`; CSV and JSON encodings of the same
//! grid parse back to identical doubles.

use crate::linalg::ComplexMatrix;
use crate::sun::{GeneratorIndex, GeneratorSet, StructureConstants};
use crate::wigner::WignerGrid;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// On-disk density matrix: `{"n": N, "re": [[...]], "im": [[...]]}`, row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityMatrixFile {
    pub n: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl DensityMatrixFile {
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let n = self.n;
        if self.re.len() != n || self.im.len() != n {
            return Err(Error::InvalidParameter(format!(
                "matrix file declares n={n} but carries {}x{} rows",
                self.re.len(),
                self.im.len()
            )));
        }
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for (rr, ri) in self.re.iter().zip(&self.im) {
            if rr.len() != n || ri.len() != n {
                return Err(Error::InvalidParameter("ragged matrix rows".into()));
            }
            re.extend_from_slice(rr);
            im.extend_from_slice(ri);
        }
        ComplexMatrix::from_parts(n, &re, &im)
    }

    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        let n = m.dim();
        let re = (0..n)
            .map(|r| (0..n).map(|c| m.get(r, c).re).collect())
            .collect();
        let im = (0..n)
            .map(|r| (0..n).map(|c| m.get(r, c).im).collect())
            .collect();
        Self { n, re, im }
    }
}

/// CSV grid: header `mu,nu,w`, one row per point, first label outermost.
pub fn grid_to_csv(grid: &WignerGrid) -> String {
    let labels = grid.labels();
    let mut out = String::from("mu,nu,w\n");
    for (i, &mu) in labels.iter().enumerate() {
        for (j, &nu) in labels.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", mu, nu, grid.value(i, j)));
        }
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct GridFile {
    n: usize,
    basis: String,
    labels: Vec<i64>,
    values: Vec<Vec<f64>>,
}

/// JSON grid with explicit labels, row-major values.
pub fn grid_to_json(grid: &WignerGrid) -> String {
    let n = grid.dim();
    let file = GridFile {
        n,
        basis: match grid.basis() {
            crate::wigner::WignerBasis::G => "g".into(),
            crate::wigner::WignerBasis::Delta => "delta".into(),
        },
        labels: grid.labels(),
        values: (0..n)
            .map(|i| (0..n).map(|j| grid.value(i, j)).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("grid serializes")
}

/// Parse the JSON grid back to `(labels, row-major values)`.
pub fn grid_from_json(text: &str) -> Result<(Vec<i64>, Vec<f64>)> {
    let file: GridFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidParameter(format!("grid parse: {e}")))?;
    Ok((file.labels, file.values.into_iter().flatten().collect()))
}

#[derive(Debug, Serialize)]
struct GeneratorRecord {
    index: usize,
    kind: &'static str,
    alpha: Option<usize>,
    beta: Option<usize>,
    gamma: Option<usize>,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// JSON dump of the full generator set; indices are 1-based to match the
/// conventional numbering.
pub fn generators_to_json(gens: &GeneratorSet) -> String {
    let n = gens.dim();
    let records: Vec<GeneratorRecord> = gens
        .iter()
        .enumerate()
        .map(|(i, (idx, m))| {
            let (kind, alpha, beta, gamma) = match *idx {
                GeneratorIndex::U { alpha, beta } => ("u", Some(alpha), Some(beta), None),
                GeneratorIndex::V { alpha, beta } => ("v", Some(alpha), Some(beta), None),
                GeneratorIndex::W { gamma } => ("w", None, None, Some(gamma)),
            };
            GeneratorRecord {
                index: i + 1,
                kind,
                alpha,
                beta,
                gamma,
                re: (0..n)
                    .map(|r| (0..n).map(|c| m.get(r, c).re).collect())
                    .collect(),
                im: (0..n)
                    .map(|r| (0..n).map(|c| m.get(r, c).im).collect())
                    .collect(),
            }
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("generators serialize")
}

#[derive(Debug, Serialize)]
struct ConstantRecord {
    i: usize,
    j: usize,
    k: usize,
    value: f64,
}

/// JSON dump of one structure tensor as sparse 1-based triples.
pub fn constants_to_json(sc: &StructureConstants, tensor: char) -> Result<String> {
    let entries = match tensor {
        'f' => sc.f_entries(),
        'd' => sc.d_entries(),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown tensor '{other}', expected 'f' or 'd'"
            )))
        }
    };
    let records: Vec<ConstantRecord> = entries
        .iter()
        .map(|&(i, j, k, value)| ConstantRecord {
            i: i + 1,
            j: j + 1,
            k: k + 1,
            value,
        })
        .collect();
    Ok(serde_json::to_string_pretty(&records).expect("constants serialize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Complex;
    use crate::wigner::WignerBasis;

    #[test]
    fn density_file_round_trip() {
        let m = ComplexMatrix::from_fn(3, |r, c| Complex::new(r as f64, c as f64 / 3.0));
        let file = DensityMatrixFile::from_matrix(&m);
        let back = file.to_matrix().unwrap();
        assert!(back.max_abs_diff(&m) == 0.0);
    }

    #[test]
    fn density_file_rejects_ragged_input() {
        let file = DensityMatrixFile {
            n: 2,
            re: vec![vec![1.0, 0.0], vec![0.0]],
            im: vec![vec![0.0, 0.0], vec![0.0, 0.0]],
        };
        assert!(file.to_matrix().is_err());
    }

    #[test]
    fn csv_and_json_agree_to_the_bit() {
        let grid = WignerGrid::from_values(
            3,
            WignerBasis::G,
            vec![
                17.0 / 9.0,
                -4.0 / 9.0,
                1.0 / 3.0,
                0.1 + 0.2,
                1.0,
                0.0,
                5.0 / 9.0,
                2.0 / 9.0,
                -1e-17,
            ],
        )
        .unwrap();
        let csv = grid_to_csv(&grid);
        let json = grid_to_json(&grid);
        let (_, json_vals) = grid_from_json(&json).unwrap();
        let csv_vals: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
            .collect();
        assert_eq!(csv_vals.len(), 9);
        for (a, b) in csv_vals.iter().zip(&json_vals) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        // shortest-roundtrip printing keeps all 17 significant digits of 17/9
        assert!(csv.contains("1.8888888888888888"));
    }

    #[test]
    fn delta_grid_uses_symmetric_labels() {
        let grid = WignerGrid::from_values(3, WignerBasis::Delta, vec![0.0; 9]).unwrap();
        let csv = grid_to_csv(&grid);
        assert!(csv.starts_with("mu,nu,w\n-1,-1,0\n"));
    }
}
