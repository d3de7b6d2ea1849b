//! The six main-term constants and the weight integral.

use hecke_moments::moments::{constant_table, phi_eval, phi_hat0};

fn main() {
    for c in constant_table() {
        println!("{:<5} = {:<20} {}", c.name, c.decimal, c.formula);
    }
    println!("Phi(1.5) = {:.15e}  (e^-4 = {:.15e})", phi_eval(1.5), (-4f64).exp());
    println!("Phi_hat(0) = {:.15}", phi_hat0());
}
