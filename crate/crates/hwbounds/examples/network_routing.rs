//! Single-path versus multi-path (flooding) routing on a diamond network:
//! cut-set bounds, the widest-path and max-flow dual certificates, and the
//! JSON interchange format.
//!
//! Run with: cargo run --example network_routing

use hwbounds::measures::MeasureTag;
use hwbounds::network::{
    max_flow_value, multi_path_bound, single_path_bound, widest_path, EdgeWeight, QuantumNetwork,
};

fn main() {
    let json = r#"{
      "nodes": ["A", "r1", "r2", "B"],
      "edges": [
        {"u": "A",  "v": "r1", "eta": -1.0, "d": 4},
        {"u": "A",  "v": "r2", "eta": -0.8, "d": 4},
        {"u": "r1", "v": "r2", "eta": -0.9, "d": 4},
        {"u": "r1", "v": "B",  "eta": -0.7, "d": 4},
        {"u": "r2", "v": "B",  "eta": -1.0, "d": 4}
      ],
      "terminals": {"A": "A", "B": "B"}
    }"#;
    let net = QuantumNetwork::from_json_str(json).unwrap();
    println!(
        "diamond network: {} nodes, {} edges, terminals A - B",
        net.node_count(),
        net.edges().len()
    );
    println!();

    let k_weight = EdgeWeight::BestK;
    let single = single_path_bound(&net, k_weight).unwrap();
    let wp = widest_path(&net, k_weight);
    println!("single-path K bound (per-edge best of the K pool):");
    println!("  min-cut max   = {:.9}", single.cut_value);
    println!("  widest path   = {:.9}  via {:?}", wp.value, wp.path_nodes);
    println!("  cut A-side    = {:?}", single.partition.0);
    println!();

    let q_weight = EdgeWeight::Measure(MeasureTag::RpptRegularised);
    let multi = multi_path_bound(&net, q_weight).unwrap();
    let flow = max_flow_value(&net, q_weight);
    println!("multi-path (flooding) Q2 bound, per-edge E_P_inf:");
    println!("  min-cut sum   = {:.9}", multi.cut_value);
    println!("  max-flow      = {:.9}", flow);
    println!("  cut A-side    = {:?}", multi.partition.0);
    println!("  cut edges     = {:?}", multi.cut_edges);
    println!();

    let multi_k = multi_path_bound(&net, k_weight).unwrap();
    println!(
        "flooding beats single-path for K: {:.9} >= {:.9}",
        multi_k.cut_value, single.cut_value
    );
}
