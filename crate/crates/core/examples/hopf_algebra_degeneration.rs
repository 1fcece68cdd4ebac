//! Over the ground field a Hopf algebroid is a Hopf algebra: the classical
//! checker and the algebroid checker agree on every example.

use algebroid::constructions::{
    check_hopf_algebra, cyclic_group_table, dual_hopf, group_algebra, hopf_algebra_as_algebroid, sweedler_h4,
    symmetric_group_s3_table, HopfAlgebraData,
};
use algebroid::hopf_algebroid::verify_hopf_algebroid;
use algebroid::Rational;

fn main() {
    let mut corpus: Vec<(String, HopfAlgebraData<Rational>)> =
        (1..=4).map(|n| (format!("k[Z{n}]"), group_algebra(&cyclic_group_table(n)).unwrap())).collect();
    corpus.push(("k[S3]".into(), group_algebra(&symmetric_group_s3_table()).unwrap()));
    corpus.push(("H4".into(), sweedler_h4().unwrap()));
    corpus.push(("H4*".into(), dual_hopf(&sweedler_h4().unwrap())));
    println!("{:<8} {:>4} {:>10} {:>10}", "algebra", "dim", "classical", "algebroid");
    for (name, a) in &corpus {
        let classical = check_hopf_algebra(a);
        let algebroid = verify_hopf_algebroid(&hopf_algebra_as_algebroid(a).unwrap());
        let verdict = |r: &algebroid::Report| format!("{}/{}", r.checks.len() - r.failed().count(), r.checks.len());
        println!("{name:<8} {:>4} {:>10} {:>10}", a.dim(), verdict(&classical), verdict(&algebroid));
    }
}
