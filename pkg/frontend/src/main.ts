import { ApiClient } from "./api";
import { initApp } from "./app";

declare global {
  interface Window {
    YAZIM_API_BASE?: string;
  }
}

const base = window.YAZIM_API_BASE ?? "";
initApp(document, new ApiClient(base));
