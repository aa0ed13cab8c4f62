/**
 * Spawns the backing JSON service as a child process for integration tests.
 *
 * The service binds an ephemeral port (`--port 0`) and announces the real
 * address on stdout; tests wait for that line and talk to the printed URL.
 */
import { spawn } from "node:child_process";

export interface RunningService {
  url: string;
  stop(): Promise<void>;
}

export async function startService(): Promise<RunningService> {
  const child = spawn("python3", ["-m", "ilc.cli", "serve", "--port", "0"], {
    stdio: ["ignore", "pipe", "pipe"],
    env: { ...process.env, PYTHONUNBUFFERED: "1" },
  });

  const url = await new Promise<string>((resolve, reject) => {
    let seen = "";
    const timer = setTimeout(() => {
      reject(new Error(`service did not announce itself, output so far: ${seen}`));
    }, 15000);
    const look = (chunk: Buffer) => {
      seen += chunk.toString();
      const found = seen.match(/http:\/\/[\d.]+:\d+/);
      if (found !== null) {
        clearTimeout(timer);
        resolve(found[0]);
      }
    };
    child.stdout.on("data", look);
    child.stderr.on("data", (chunk: Buffer) => {
      seen += chunk.toString();
    });
    child.once("exit", (code) => {
      clearTimeout(timer);
      reject(new Error(`service exited before it was ready (${code}): ${seen}`));
    });
  });

  return {
    url,
    stop: () =>
      new Promise<void>((resolve) => {
        child.once("exit", () => resolve());
        child.kill();
        setTimeout(() => child.kill("SIGKILL"), 2000).unref();
      }),
  };
}
