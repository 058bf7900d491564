//! Generic rank, rank-neutral directions and a criticality certificate for a
//! space given as JSON, as the CLI reads it.

use rankcrit::space::{certify_rank_critical, generic_rank, rnd, MatrixSpace, SamplingOptions};

const SPACE: &str = r#"{
  "n": 3,
  "basis": [
    [["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]],
    [["0", "0", "1"], ["0", "0", "0"], ["-1", "0", "0"]],
    [["0", "0", "0"], ["0", "0", "1"], ["0", "-1", "0"]]
  ]
}"#;

fn main() -> rankcrit::Result<()> {
    let a = MatrixSpace::from_json(&serde_json::from_str(SPACE).unwrap())?;
    let opts = SamplingOptions::with_seed(7);

    let (r, how) = generic_rank(&a, &opts);
    println!("dim {}, generic rank {r} ({how:?})", a.dim());

    let comp = rnd(&a, Some((r, how)), &opts)?;
    println!("RND dim {} after {} samples", comp.rnd.dim(), comp.samples_used);

    let cert = certify_rank_critical(&a, &opts)?;
    let json = cert.to_json();
    println!("status {}, provenance {}", json["status"], json["rank_provenance"]);

    // Adding the identity breaks singularity; the bigger space is not critical.
    let mut mats = a.basis().to_vec();
    mats.push(rankcrit::Matrix::identity(3));
    let b = MatrixSpace::from_spanning(3, mats)?;
    let c = certify_rank_critical(&b, &opts)?;
    println!("skew + I: rank {}, {:?}", c.generic_rank, c.status);
    Ok(())
}
