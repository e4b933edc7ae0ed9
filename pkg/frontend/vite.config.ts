import { defineConfig } from "vitest/config";

export default defineConfig({
  build: { outDir: "dist" },
  server: {
    port: 5173,
    proxy: {
      "/api": { target: "http://127.0.0.1:8000", changeOrigin: true },
    },
  },
  test: {
    environment: "jsdom",
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
