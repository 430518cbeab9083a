macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(zero_forcing_example, "zero_forcing.rs", zero_forcing_example_runs);
example!(distance_backbone_example, "distance_backbone.rs", distance_backbone_example_runs);
example!(rank_oracle_example, "rank_oracle.rs", rank_oracle_example_runs);
example!(preservation_example, "preservation.rs", preservation_example_runs);
example!(experiment_example, "random_graph_experiment.rs", experiment_example_runs);
example!(formats_example, "formats.rs", formats_example_runs);
