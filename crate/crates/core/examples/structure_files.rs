//! Writing structures to the JSON file format and reading them back.

use algebroid::constructions::{dual_hopf, sweedler_h4};
use algebroid::format::{decode, encode, parse_file, to_canonical_json, Structure};
use algebroid::{Fp, Rational};

fn main() {
    let h4 = sweedler_h4::<Rational>().unwrap();
    let text = to_canonical_json(&encode(&Structure::HopfAlgebra(h4.clone())));
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));
    println!("... {} lines", text.lines().count());

    let back = decode::<Rational>(&parse_file(&text).unwrap()).unwrap();
    let again = to_canonical_json(&encode(&back));
    println!("round trip is byte-identical: {}", again == text);

    let dd = to_canonical_json(&encode(&Structure::HopfAlgebra(dual_hopf(&dual_hopf(&h4)))));
    println!("dual of dual is byte-identical: {}", dd == text);

    // the field is part of the file; decoding with another field is refused
    match decode::<Fp<5>>(&parse_file(&text).unwrap()) {
        Ok(_) => println!("decoded over the wrong field"),
        Err(e) => println!("over prime 5: {e}"),
    }
    match parse_file("{\"field\": \"rational\", \"kind\": \"monoid\"}") {
        Ok(f) => println!("parsed, decode says: {:?}", decode::<Rational>(&f).err()),
        Err(e) => println!("malformed: {e}"),
    }
}
