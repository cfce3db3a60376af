//! Relation between the `p = x` second kind (q-bracket multiplier) and the
//! `p = x^u` first kind of type I.

use qrstirling::identities::mixed_relation_defect;

fn main() {
    for u in 1..=3 {
        let defects: Vec<String> = (1..=3)
            .map(|k| mixed_relation_defect(u, 0, 5, k).unwrap().to_string())
            .collect();
        println!("u={u}, n=5, k=1..3: defects {}", defects.join(", "));
    }
}
