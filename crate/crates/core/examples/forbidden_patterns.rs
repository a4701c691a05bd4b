//! Every completion of the forbidden induced patterns, with its floating λ₂
//! and the exact number of distinct eigenvalues above θ.

use distspec::classifier::all_completion_cases;
use distspec::spectra::Theta;

fn main() {
    println!("θ = {:.6}", Theta::theta().to_f64());
    for c in all_completion_cases() {
        let slots: Vec<String> = [c.slots.a, c.slots.b, c.slots.c]
            .iter()
            .flatten()
            .map(u32::to_string)
            .collect();
        println!(
            "{:<3} {:<8} λ₂ = {:>8.4}  roots above θ: {}",
            c.pattern,
            slots.join(","),
            c.lambda2,
            c.roots_above_theta()
        );
    }
}
