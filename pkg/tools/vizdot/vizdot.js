#!/usr/bin/env node
// dot-compatible CLI over the WASM build of the graphviz layout toolkit.
// Usage: vizdot.js [-K<engine>] [-T<format>]; DOT on stdin, artifact on stdout.
// Exit 1 with messages on stderr when the input is rejected.
const { instance } = require("@viz-js/viz");

async function main() {
  let engine = "dot";
  let format = "dot";
  for (const arg of process.argv.slice(2)) {
    if (arg.startsWith("-K")) engine = arg.slice(2);
    else if (arg.startsWith("-T")) format = arg.slice(2);
    else {
      process.stderr.write(`vizdot: unknown argument ${arg}\n`);
      process.exit(2);
    }
  }
  const chunks = [];
  for await (const chunk of process.stdin) chunks.push(chunk);
  const source = Buffer.concat(chunks).toString("utf8");
  const viz = await instance();
  const result = viz.render(source, { engine, format });
  if (result.status !== "success") {
    const messages = (result.errors || []).map((e) => e.message).join("\n");
    process.stderr.write((messages || "render failed") + "\n");
    process.exit(1);
  }
  process.stdout.write(result.output);
}

main().catch((err) => {
  process.stderr.write(String((err && err.message) || err) + "\n");
  process.exit(1);
});
