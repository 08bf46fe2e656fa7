#include "ncdtree/external_codec.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <mutex>

#include "ncdtree/errors.hpp"

extern char** environ;

namespace ncdtree {

namespace {

constexpr std::size_t kMaxDiagnostics = 4096;

bool is_executable_file(const std::string& path) {
  struct stat st {};
  return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode) && ::access(path.c_str(), X_OK) == 0;
}

std::string resolve_executable(const std::string& name) {
  if (name.find('/') != std::string::npos) return is_executable_file(name) ? name : std::string{};
  const char* path = std::getenv("PATH");
  std::string_view dirs = path ? path : "/usr/local/bin:/usr/bin:/bin";
  while (!dirs.empty()) {
    auto colon = dirs.find(':');
    std::string dir(dirs.substr(0, colon));
    dirs = colon == std::string_view::npos ? std::string_view{} : dirs.substr(colon + 1);
    if (dir.empty()) dir = ".";
    std::string candidate = dir + "/" + name;
    if (is_executable_file(candidate)) return candidate;
  }
  return {};
}

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(Fd&& o) noexcept : fd_(std::exchange(o.fd_, -1)) {}
  Fd& operator=(Fd&& o) noexcept {
    if (this != &o) {
      reset();
      fd_ = std::exchange(o.fd_, -1);
    }
    return *this;
  }
  ~Fd() { reset(); }
  int get() const noexcept { return fd_; }
  explicit operator bool() const noexcept { return fd_ >= 0; }
  void reset() noexcept {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

struct Pipe {
  Fd read, write;
};

Pipe make_pipe() {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) throw CodecFailure(std::string("pipe: ") + std::strerror(errno));
  return {Fd(fds[0]), Fd(fds[1])};
}

void set_nonblocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK); }

void ignore_sigpipe_once() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

struct SpawnActions {
  posix_spawn_file_actions_t actions;
  SpawnActions() { posix_spawn_file_actions_init(&actions); }
  ~SpawnActions() { posix_spawn_file_actions_destroy(&actions); }
};

}  // namespace

ExternalCommandCodec::ExternalCommandCodec(std::vector<std::string> argv)
    : Codec(CodecSpec::external(std::move(argv))) {
  executable_ = resolve_executable(spec().command.front());
  if (executable_.empty()) throw CodecUnavailable("compressor command not found: '" + spec().command.front() + "'");
}

CodeLength ExternalCommandCodec::measure(ByteView data) const {
  ignore_sigpipe_once();
  Pipe in = make_pipe(), out = make_pipe(), err = make_pipe();

  SpawnActions fa;
  posix_spawn_file_actions_adddup2(&fa.actions, in.read.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&fa.actions, out.write.get(), STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&fa.actions, err.write.get(), STDERR_FILENO);

  std::vector<char*> argv;
  for (const auto& a : spec().command) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);

  pid_t pid = 0;
  int rc = ::posix_spawn(&pid, executable_.c_str(), &fa.actions, nullptr, argv.data(), environ);
  if (rc != 0) throw CodecUnavailable("cannot start '" + executable_ + "': " + std::strerror(rc));
  in.read.reset();
  out.write.reset();
  err.write.reset();
  set_nonblocking(in.write.get());
  set_nonblocking(out.read.get());
  set_nonblocking(err.read.get());

  std::uint64_t produced = 0;
  std::size_t written = 0;
  bool stdin_closed_early = false;
  std::string diagnostics;
  std::array<char, 65536> buf;

  if (data.empty()) in.write.reset();
  while (out.read || err.read) {
    std::array<pollfd, 3> fds{};
    nfds_t count = 0;
    auto add = [&](const Fd& fd, short events) {
      if (fd) fds[count++] = {fd.get(), events, 0};
    };
    add(in.write, POLLOUT);
    add(out.read, POLLIN);
    add(err.read, POLLIN);
    if (::poll(fds.data(), count, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (nfds_t k = 0; k < count; ++k) {
      if (!fds[k].revents) continue;
      int fd = fds[k].fd;
      if (in.write && fd == in.write.get()) {
        ssize_t w = ::write(fd, data.data() + written, data.size() - written);
        if (w > 0) {
          written += static_cast<std::size_t>(w);
          if (written == data.size()) in.write.reset();
        } else if (w < 0 && errno != EAGAIN && errno != EINTR) {
          stdin_closed_early = true;
          in.write.reset();
        }
      } else {
        ssize_t r = ::read(fd, buf.data(), buf.size());
        if (r > 0) {
          if (out.read && fd == out.read.get()) {
            produced += static_cast<std::uint64_t>(r);
          } else if (diagnostics.size() < kMaxDiagnostics) {
            diagnostics.append(buf.data(), std::min<std::size_t>(r, kMaxDiagnostics - diagnostics.size()));
          }
        } else if (r == 0 || (errno != EAGAIN && errno != EINTR)) {
          if (out.read && fd == out.read.get()) out.read.reset();
          else err.read.reset();
        }
      }
    }
  }
  if (written < data.size()) stdin_closed_early = true;
  in.write.reset();

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  std::string who = "compressor '" + name().substr(4) + "'";
  if (WIFSIGNALED(status))
    throw CodecFailure(who + " killed by signal " + std::to_string(WTERMSIG(status)) + ": " + diagnostics);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    throw CodecFailure(who + " exited with status " + std::to_string(WEXITSTATUS(status)) + ": " + diagnostics);
  if (stdin_closed_early)
    throw CodecFailure(who + " closed its input after " + std::to_string(written) + " of " +
                       std::to_string(data.size()) + " bytes");
  return {produced};
}

std::uint64_t ExternalCommandCodec::overhead_bound(std::uint64_t) const {
  return std::numeric_limits<std::uint64_t>::max();
}

}  // namespace ncdtree
