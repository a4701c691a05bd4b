//! Builds family members, compares closed forms with direct computation and
//! recovers the parameters from the polynomial alone.

use distspec::apsp;
use distspec::families::{members_of_order, pendant_params_from_poly, reconstruct_cone_partition};
use distspec::spectra::char_poly_exact;

fn main() -> distspec::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for d in members_of_order(n) {
        let closed = d.closed_form_poly()?;
        let direct = char_poly_exact(&apsp(&d.build()?)?.to_rows())?;
        let back = match (pendant_params_from_poly(&closed), reconstruct_cone_partition(&closed)) {
            (Some((s, t)), _) => format!("pendant ({s},{t})"),
            (_, Some(parts)) => format!("cone {parts:?}"),
            _ => "none".into(),
        };
        println!("{d:<16} closed form {} direct, recovered {back}", if closed == direct { "==" } else { "!=" });
        println!("    {closed}");
    }
    Ok(())
}
