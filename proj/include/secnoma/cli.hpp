#pragma once

namespace secnoma {

/// Entry point of the `secnoma` tool. Usage errors exit with status 2;
/// infeasible instances are reported on stdout with status 0.
int cli_main(int argc, char** argv);

}  // namespace secnoma
