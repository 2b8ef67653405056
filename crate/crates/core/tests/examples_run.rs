mod adjugate_identities {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/adjugate_identities.rs"));
}

mod orbit_models {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orbit_models.rs"));
}

mod critical_points {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/critical_points.rs"));
}

mod rational_potential {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rational_potential.rs"));
}

mod bruhat_charts {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bruhat_charts.rs"));
}

mod symplectic_forms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/symplectic_forms.rs"));
}

mod sl2_fibers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sl2_fibers.rs"));
}

mod groebner_basis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/groebner_basis.rs"));
}

mod segre_compactification {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/segre_compactification.rs"));
}

mod verify_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_report.rs"));
}

#[test]
fn adjugate_identities_example_runs() {
    adjugate_identities::run_example().expect("adjugate_identities example");
}

#[test]
fn orbit_models_example_runs() {
    orbit_models::run_example().expect("orbit_models example");
}

#[test]
fn critical_points_example_runs() {
    critical_points::run_example().expect("critical_points example");
}

#[test]
fn rational_potential_example_runs() {
    rational_potential::run_example().expect("rational_potential example");
}

#[test]
fn bruhat_charts_example_runs() {
    bruhat_charts::run_example().expect("bruhat_charts example");
}

#[test]
fn symplectic_forms_example_runs() {
    symplectic_forms::run_example().expect("symplectic_forms example");
}

#[test]
fn sl2_fibers_example_runs() {
    sl2_fibers::run_example().expect("sl2_fibers example");
}

#[test]
fn groebner_basis_example_runs() {
    groebner_basis::run_example().expect("groebner_basis example");
}

#[test]
fn segre_compactification_example_runs() {
    segre_compactification::run_example().expect("segre_compactification example");
}

#[test]
fn verify_report_example_runs() {
    verify_report::run_example().expect("verify_report example");
}
