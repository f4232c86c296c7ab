#[allow(dead_code)]
mod membership {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/membership.rs"));
}

#[test]
fn membership_example_runs() {
    membership::run_example().expect("membership example should run");
}

#[allow(dead_code)]
mod feq_ordered {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/feq_ordered.rs"));
}

#[test]
fn feq_ordered_example_runs() {
    feq_ordered::run_example().expect("feq_ordered example should run");
}

#[allow(dead_code)]
mod similarity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/similarity.rs"));
}

#[test]
fn similarity_example_runs() {
    similarity::run_example().expect("similarity example should run");
}

#[allow(dead_code)]
mod conversion_tables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/conversion_tables.rs"));
}

#[test]
fn conversion_tables_example_runs() {
    conversion_tables::run_example().expect("conversion_tables example should run");
}

#[allow(dead_code)]
mod case_study_query {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/case_study_query.rs"));
}

#[test]
fn case_study_query_example_runs() {
    case_study_query::run_example().expect("case_study_query example should run");
}

#[allow(dead_code)]
mod explain_plan {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/explain_plan.rs"));
}

#[test]
fn explain_plan_example_runs() {
    explain_plan::run_example().expect("explain_plan example should run");
}

#[allow(dead_code)]
mod catalog_roundtrip {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalog_roundtrip.rs"));
}

#[test]
fn catalog_roundtrip_example_runs() {
    catalog_roundtrip::run_example().expect("catalog_roundtrip example should run");
}

#[allow(dead_code)]
mod factory_queries {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/factory_queries.rs"));
}

#[test]
fn factory_queries_example_runs() {
    factory_queries::run_example().expect("factory_queries example should run");
}

#[allow(dead_code)]
mod shell_session {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/shell_session.rs"));
}

#[test]
fn shell_session_example_runs() {
    shell_session::run_example().expect("shell_session example should run");
}
