import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    include: ["tests/**/*.test.ts"],
    exclude: process.env.YAZIM_E2E ? [] : ["tests/e2e.test.ts"],
    testTimeout: 120000,
    hookTimeout: 120000,
  },
});
