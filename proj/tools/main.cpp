#include "roleembed/cli_app.hpp"

int main(int argc, char** argv) { return roleembed::run_cli(argc, argv); }
