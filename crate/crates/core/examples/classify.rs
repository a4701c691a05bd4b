//! Classifies a few graphs and checks each certificate independently.

use distspec::classifier::{check_certificate, classify_structural, classify_spectral, Classification};
use distspec::families::{build_cone_of_cliques, build_pendant_clique};
use distspec::graph::{cycle, path, star};

fn main() -> distspec::Result<()> {
    let graphs = [
        ("K_5^2", build_pendant_clique(5, 2)?),
        ("cone(3,2,1)", build_cone_of_cliques(&[3, 2, 1])?),
        ("C5", cycle(5)),
        ("P5", path(5)),
        ("K_1,6", star(6)),
    ];
    for (name, g) in &graphs {
        let c = classify_structural(g)?;
        let exact = classify_spectral(g)?;
        let what = match &c {
            Classification::InFamily(d) => format!("family {d}"),
            Classification::AboveThreshold(w) => {
                format!("witness {} on {:?}, λ₂ = {:.4}", w.pattern, w.vertices, w.lambda2)
            }
        };
        println!("{name:<12} {what:<40} exact {exact:<6} certificate {}", check_certificate(g, &c));
    }
    Ok(())
}
