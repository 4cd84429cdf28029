//! Build the I/W/T'/T'' decomposition of F6 and audit every structural check
//! over all maximum independent sets.

use equimatch::decomposition::{audit_graph, build_decomposition, AuditPlan, CheckStatus};
use equimatch::families::{build_family, FamilySpec};
use equimatch::independence::maximum_independent_sets;

fn main() {
    let g = build_family(&FamilySpec::F(6)).unwrap();
    let i = maximum_independent_sets(&g, 1)[0];
    let v = i.first().unwrap();
    let d = build_decomposition(&g, i, v, None).unwrap();
    println!("I={:?} v={v}", i.to_vec());
    println!(
        "W={:?} T'={:?} T''={:?}",
        d.w.to_vec(),
        d.t_prime.to_vec(),
        d.t_double_prime.to_vec()
    );
    println!("M_v={:?}", d.mv.edges());

    let audit = audit_graph(
        &g,
        &AuditPlan {
            max_sets_cap: 10,
            matchings_per_vertex: 3,
            ..AuditPlan::default()
        },
    );
    println!(
        "{} decompositions audited, {} failing checks",
        audit.runs.len(),
        audit.failures()
    );
    for rec in &audit.runs[0].report.checks {
        let mark = match rec.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skip",
        };
        println!("  {mark}  {:<32} {}", rec.check_id, rec.citation);
    }
}
