#ifndef TORILINK_CLI_HPP
#define TORILINK_CLI_HPP

namespace torilink {

// Entry point of the torilink tool.  Returns the process exit code:
// 0 on success, 1 when a verification fails, 2 on usage errors.
int run_cli(int argc, char** argv);

}  // namespace torilink

#endif
