//! Enumerate type B set partitions and compare with the counting recursion.

use qrstirling::typeb::{count_b, enumerate_b_partitions};

fn main() {
    for p in enumerate_b_partitions(2, 1, 0).unwrap() {
        println!("{p}");
    }
    println!();
    for n in 0..=5i64 {
        let row: Vec<String> = (0..=n).map(|k| count_b(n, k, 0).to_string()).collect();
        println!("n={n}: {}", row.join(" "));
    }
    let listed = enumerate_b_partitions(5, 3, 2).unwrap().len();
    println!("\nS^B(5,3,2): {listed} listed, {} counted", count_b(5, 3, 2));
}
