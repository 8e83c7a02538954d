fn main() {
    std::process::exit(ggh_tool::main_with_args(std::env::args_os()));
}
