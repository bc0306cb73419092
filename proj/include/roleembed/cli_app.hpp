// cli_app.hpp — the role_embed command line, callable in-process for tests.
#pragma once

namespace roleembed {

/// Runs the CLI (generate / embed / eval-cluster / eval-classify / plot).
/// Returns the process exit code; on failure, files created by the failing
/// command are removed.
int run_cli(int argc, const char* const* argv);

} // namespace roleembed
