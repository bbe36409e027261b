//! Dumps kernel entries, grids, and tensors as JSON for external
//! cross-validation tooling.

use dwigner::io::DensityMatrixFile;
use dwigner::phase_bases::{g_basis, PhasePoint};
use dwigner::sun::{DensityMatrix, GeneratorSet, StructureConstants};
use dwigner::wigner::{characteristic, wigner_direct, WignerBasis};
use dwigner::SchwingerPair;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    match args[1].as_str() {
        "kernel" => {
            let n: usize = args[2].parse().unwrap();
            let pair = SchwingerPair::new(n).unwrap();
            let mut records = Vec::new();
            for mu in 0..n as i64 {
                for nu in 0..n as i64 {
                    let g = g_basis(&pair, PhasePoint { mu, nu });
                    let re: Vec<Vec<f64>> = (0..n)
                        .map(|r| (0..n).map(|c| g.get(r, c).re).collect())
                        .collect();
                    let im: Vec<Vec<f64>> = (0..n)
                        .map(|r| (0..n).map(|c| g.get(r, c).im).collect())
                        .collect();
                    records.push(serde_json::json!({"mu": mu, "nu": nu, "re": re, "im": im}));
                }
            }
            println!("{}", serde_json::Value::Array(records));
        }
        "wigner" => {
            let file: DensityMatrixFile = serde_json::from_str(&args[2]).unwrap();
            let rho = DensityMatrix::new(file.to_matrix().unwrap()).unwrap();
            let pair = SchwingerPair::new(file.n).unwrap();
            let grid = wigner_direct(&rho, &pair, WignerBasis::G).unwrap();
            let mut records = Vec::new();
            for (i, &mu) in grid.labels().iter().enumerate() {
                for (j, &nu) in grid.labels().iter().enumerate() {
                    records.push(serde_json::json!({"mu": mu, "nu": nu, "w": grid.value(i, j)}));
                }
            }
            println!("{}", serde_json::Value::Array(records));
        }
        "chi" => {
            let file: DensityMatrixFile = serde_json::from_str(&args[2]).unwrap();
            let rho = DensityMatrix::new(file.to_matrix().unwrap()).unwrap();
            let pair = SchwingerPair::new(file.n).unwrap();
            let chi = characteristic(&rho, &pair).unwrap();
            let mut records = Vec::new();
            for eta in 0..file.n {
                for xi in 0..file.n {
                    let v = chi.value(eta, xi);
                    records.push(
                        serde_json::json!({"eta": eta, "xi": xi, "re": v.re, "im": v.im}),
                    );
                }
            }
            println!("{}", serde_json::Value::Array(records));
        }
        "constants" => {
            let n: usize = args[2].parse().unwrap();
            let gens = GeneratorSet::new(n).unwrap();
            let sc = StructureConstants::new(&gens).unwrap();
            let mut records = Vec::new();
            for &(i, j, k, v) in sc.f_entries() {
                records.push(
                    serde_json::json!({"i": i+1, "j": j+1, "k": k+1, "value": v, "tensor": "f"}),
                );
            }
            for &(i, j, k, v) in sc.d_entries() {
                records.push(
                    serde_json::json!({"i": i+1, "j": j+1, "k": k+1, "value": v, "tensor": "d"}),
                );
            }
            println!("{}", serde_json::Value::Array(records));
        }
        other => panic!("unknown dump kind {other}"),
    }
}
