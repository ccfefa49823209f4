fn main() { println!("knotpg"); }
